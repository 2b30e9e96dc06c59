#include "rdunkl/transmutation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rdunkl/errors.hpp"
#include "rdunkl/operators.hpp"

namespace rdunkl {

TransmutationOperator::TransmutationOperator(const IndexVector& mu, int N) : mu_(mu), N_(N) {
  if (N < 0) throw ParameterError("transmutation operator needs N >= 0");
  int r = mu.r();
  CyclicStructure c(r);
  for (int i = 0; i < r; ++i) {
    if (std::abs(mu.a(i)) <= 1e-14) continue;
    double beta = mu.alpha(i) + static_cast<double>(i) / r;
    if (!(beta > 0.0)) throw ParameterError("V_mu needs alpha_i + i/r > 0 on included dimensions");
    double ci = r * std::tgamma(mu.alpha(i) + 1.0) / (std::tgamma(beta) * std::tgamma(1.0 - static_cast<double>(i) / r));
    dims_.push_back(i);
    beta_.push_back(beta);
    c_i_.push_back(ci);
    c_mu_ *= ci;
  }
  std::vector<double> a = mu.a_values();
  P_.assign(static_cast<size_t>(r), {});
  for (int k = 1; k < r; ++k) P_[static_cast<size_t>(k)] = klyuchantsev_P(a, k).P;
  band_.assign(static_cast<size_t>(N + 1), std::vector<Complex>(static_cast<size_t>(r), 0.0));
  for (int n = 0; n <= N; ++n) {
    auto& col = band_[static_cast<size_t>(n)];
    if (c.mod(n) == 0) col[0] += chain(n);
    for (int j = 0; j < r; ++j) {
      int k = c.mod(static_cast<long>(j) - n);
      if (k == 0 || k < j) continue;
      double Pj = P_[static_cast<size_t>(k)][static_cast<size_t>(j)];
      if (Pj == 0.0) continue;
      col[static_cast<size_t>(j)] += Pj * c.theta_pow(-j) * chain(n + k - j);
    }
  }
}

double TransmutationOperator::chain(int m) const {
  int r = mu_.r();
  double v = 1.0;
  for (size_t d = 0; d < dims_.size(); ++d) v *= c_i_[d] * rl_coefficient(beta_[d], m + r - dims_[d] - 1, r);
  return v;
}

Complex TransmutationOperator::entry(int n, int j) const {
  if (n < 0 || n > N_ || j < 0 || j >= mu_.r()) return 0.0;
  return band_[static_cast<size_t>(n)][static_cast<size_t>(j)];
}

LaurentSeries TransmutationOperator::apply(const LaurentSeries& f) const {
  if (f.has_principal_part()) throw DomainError("V_mu acts on series without a principal part");
  if (f.n_max() > N_) throw ParameterError("series degree exceeds the size of V_mu");
  int r = mu_.r();
  int lo = -(r - 1);
  std::vector<Complex> v(static_cast<size_t>(std::max(0, f.n_max() - lo + 1)));
  for (int n = std::max(0, f.n_min()); n <= f.n_max(); ++n) {
    Complex cn = f[n];
    if (cn == 0.0) continue;
    for (int j = 0; j < r; ++j) v[static_cast<size_t>(n - j - lo)] += entry(n, j) * cn;
  }
  LaurentSeries out(lo, std::move(v), f.valid_order() - (r - 1));
  if (!out.has_principal_part()) out = out.resized(0, f.n_max());
  return out;
}

LaurentSeries TransmutationOperator::inverse(const LaurentSeries& f) const {
  if (f.has_principal_part()) throw DomainError("V_mu^{-1} acts on series without a principal part");
  if (f.n_max() > N_) throw ParameterError("series degree exceeds the size of V_mu");
  int r = mu_.r();
  int top = f.n_max();
  std::vector<Complex> g(static_cast<size_t>(top + 1), 0.0);
  for (int d = top; d >= 0; --d) {
    Complex rhs = f[d];
    for (int j = 1; j < r && d + j <= top; ++j) rhs -= entry(d + j, j) * g[static_cast<size_t>(d + j)];
    Complex diag = entry(d, 0);
    if (std::abs(diag) < 1e-300) throw SingularError("V_mu has a vanishing diagonal at degree " + std::to_string(d));
    g[static_cast<size_t>(d)] = rhs / diag;
  }
  return LaurentSeries(0, std::move(g), f.valid_order());
}

TransmutationOperator build_V(const IndexVector& mu, int N) { return TransmutationOperator(mu, N); }

LaurentSeries apply_V_inverse(const TransmutationOperator& V, const LaurentSeries& f) { return V.inverse(f); }

VerificationReport v_maps_exp_to_kernel_check(const IndexVector& mu, Complex lambda, int N, double tolerance) {
  CyclicStructure c(mu.r());
  TransmutationOperator V(mu, N);
  LaurentSeries lhs = V.apply(LaurentSeries::exponential(c.theta * lambda, N));
  LaurentSeries rhs = dunkl_kernel_E(mu, lambda, N);
  double res = relative_coeff_diff(lhs, rhs);
  nlohmann::json params = {{"r", mu.r()}, {"alpha", mu.alphas()}, {"lambda", {lambda.real(), lambda.imag()}}, {"degree", N}};
  return VerificationReport::bound("transmutation.exp_to_kernel", params, res, tolerance);
}

double transmutation_residual_value(const TransmutationOperator& V, const LaurentSeries& f) {
  LaurentSeries lhs = apply_D(V.mu(), V.apply(f));
  LaurentSeries rhs = V.apply(differentiate(f).resized(0, f.n_max()));
  return relative_coeff_diff(lhs, rhs);
}

VerificationReport transmutation_residual(const IndexVector& mu, const LaurentSeries& f, int N, const std::string& check_id,
                                          CheckKind kind, double tolerance) {
  TransmutationOperator V(mu, N);
  double res = transmutation_residual_value(V, f);
  nlohmann::json params = {{"r", mu.r()}, {"alpha", mu.alphas()}, {"degree", N}};
  switch (kind) {
    case CheckKind::Bound: return VerificationReport::bound(check_id, params, res, tolerance);
    case CheckKind::NegativeControl: return VerificationReport::negative_control(check_id, params, res, tolerance);
    case CheckKind::Report: return VerificationReport::info(check_id, params, res);
  }
  return VerificationReport::info(check_id, params, res);
}

double fourier_condition_value(const std::map<int, Complex>& coeffs, const CyclicStructure& c) {
  double best = 0.0;
  for (int k = 0; k < c.r; ++k) {
    double im = std::abs(c.omega_pow(k).imag());
    double s = 0.0;
    for (const auto& [n, cn] : coeffs) s += std::abs(cn) * std::exp(std::numbers::pi * std::abs(n * im));
    best = std::max(best, s);
  }
  return best;
}

LaurentSeries fourier_sum_series(const std::map<int, Complex>& coeffs, double T, int N) {
  LaurentSeries out = LaurentSeries::zero(0, N);
  for (const auto& [n, cn] : coeffs) {
    Complex rate(0.0, 2.0 * std::numbers::pi * n / T);
    out = out + LaurentSeries::exponential(rate, N) * cn;
  }
  return out;
}

VStar::VStar(const IndexVector& mu, double a, VStarOptions opt) : mu_(mu), a_(a), opt_(opt) {
  int r = mu.r();
  CyclicStructure c(r);
  for (int i = 0; i < r; ++i) {
    if (std::abs(mu.a(i)) <= 1e-14) continue;
    double beta = mu.alpha(i) + static_cast<double>(i) / r;
    if (!(beta > 0.0)) throw ParameterError("V*_mu needs alpha_i + i/r > 0 on included dimensions");
    c_mu_ *= r * std::tgamma(mu.alpha(i) + 1.0) / (std::tgamma(beta) * std::tgamma(1.0 - static_cast<double>(i) / r));
    beta_.push_back(beta);
    p_.push_back(r - i - 1);
  }
  coef_.assign(static_cast<size_t>(r), std::vector<Complex>(static_cast<size_t>(r), 0.0));
  coef_[0][0] = 1.0;
  std::vector<double> av = mu.a_values();
  for (int k = 1; k < r; ++k) {
    std::vector<double> P = klyuchantsev_P(av, k).P;
    for (int j = 0; j <= k; ++j) coef_[static_cast<size_t>(k - j)][static_cast<size_t>(k)] += std::conj(P[static_cast<size_t>(j)] * c.theta_pow(-j));
  }
}

Complex VStar::chain(const ComplexFn& h, Complex z, size_t depth) const {
  if (depth == beta_.size()) return h(z);
  int p = p_[depth];
  ComplexFn inner = [&](Complex y) { return std::pow(std::conj(y), -p) * chain(h, y, depth + 1); };
  return std::pow(std::conj(z), p) * apply_R_adjoint(beta_[depth], a_, inner, z, mu_.r(), opt_.Tmax, opt_.n_nodes);
}

Complex VStar::operator()(const ComplexFn& g, Complex z) const {
  int r = mu_.r();
  CyclicStructure c(r);
  Complex total = 0.0;
  for (int e = 0; e < r; ++e) {
    bool any = false;
    for (int k = 0; k < r; ++k) any = any || coef_[static_cast<size_t>(e)][static_cast<size_t>(k)] != 0.0;
    if (!any) continue;
    // H_e(y) = sum_k coef[e][k] conj(y)^{-k} T_k g(y).
    ComplexFn H = [&, e](Complex y) {
      std::vector<Complex> gv(static_cast<size_t>(r));
      for (int n = 0; n < r; ++n) gv[static_cast<size_t>(n)] = g(c.omega_pow(n) * y);
      Complex acc = 0.0;
      for (int k = 0; k < r; ++k) {
        Complex ck = coef_[static_cast<size_t>(e)][static_cast<size_t>(k)];
        if (ck == 0.0) continue;
        Complex tk = 0.0;
        for (int n = 0; n < r; ++n) tk += c.omega_pow(static_cast<long>(k) * n) * gv[static_cast<size_t>(n)];
        acc += ck * std::pow(std::conj(y), -k) * tk / static_cast<double>(r);
      }
      return acc;
    };
    total += std::pow(std::conj(z), e) * chain(H, z, 0);
  }
  return c_mu_ * total;
}

ComplexFn VStar::apply(ComplexFn g) const {
  return [self = *this, g = std::move(g)](Complex z) { return self(g, z); };
}

}  // namespace rdunkl
