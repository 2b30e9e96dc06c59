#include "rdunkl/mehler.hpp"

#include <cmath>
#include <sstream>

#include "rdunkl/errors.hpp"
#include "rdunkl/kernels.hpp"
#include "rdunkl/operators.hpp"

namespace rdunkl {

MehlerWeight build_mehler_weight(const IndexVector& mu, int n_nodes_per_dim) {
  MehlerWeight w{mu, {}, {}, {}, 1.0, 1.0};
  int r = mu.r();
  for (int i = 0; i < r; ++i) {
    if (std::abs(mu.a(i)) <= 1e-14) continue;
    double beta = mu.alpha(i) + static_cast<double>(i) / r;
    if (!(beta > 0.0)) {
      std::ostringstream os;
      os << "alpha_" << i << " + " << i << "/r = " << beta << " must be positive";
      throw ParameterError(os.str());
    }
    double norm = std::tgamma(mu.alpha(i) + 1.0) / (std::tgamma(beta) * std::tgamma(1.0 - static_cast<double>(i) / r));
    w.included_dims.push_back(i);
    w.beta.push_back(beta);
    w.rules.push_back(gauss_jacobi_rule(beta - 1.0, -static_cast<double>(i) / r, n_nodes_per_dim));
    w.c_norm *= norm;
    w.c_mu *= r * norm;
  }
  return w;
}

namespace {

template <class F>
Complex integrate(const MehlerWeight& w, Exec exec, F&& f) {
  return exec == Exec::Parallel ? kernels::tensor_sum_parallel(w.rules, f) : kernels::tensor_sum_serial(w.rules, f);
}

double radial(std::span<const double> v, int r) {
  double u = 1.0;
  for (double vi : v) u *= std::pow(vi, 1.0 / r);
  return u;
}

}  // namespace

Complex mehler_j(const MehlerWeight& w, Complex x, Exec exec) {
  int r = w.mu.r();
  CyclicStructure c(r);
  std::vector<Complex> rot(static_cast<size_t>(r));
  for (int n = 0; n < r; ++n) rot[static_cast<size_t>(n)] = c.theta * c.omega_pow(n) * x;
  // cos_r(y) = (1/r) sum_n e^{theta omega^n y}.
  auto integrand = [&](std::span<const double> v) {
    double u = radial(v, r);
    Complex s = 0.0;
    for (int n = 0; n < r; ++n) s += std::exp(rot[static_cast<size_t>(n)] * u);
    return s / static_cast<double>(r);
  };
  return w.c_norm * integrate(w, exec, integrand);
}

namespace {

// coef[n][e] multiplies u^e f(omega^n x u), e = k - j in 0..r-1.
std::vector<std::vector<Complex>> v_coefficients(const MehlerWeight& w, Complex x) {
  int r = w.mu.r();
  CyclicStructure c(r);
  std::vector<double> a = w.mu.a_values();
  std::vector<std::vector<Complex>> coef(static_cast<size_t>(r), std::vector<Complex>(static_cast<size_t>(r), 0.0));
  for (int n = 0; n < r; ++n) coef[static_cast<size_t>(n)][0] += 1.0 / static_cast<double>(r);
  for (int k = 1; k < r; ++k) {
    std::vector<double> P = klyuchantsev_P(a, k).P;
    for (int j = 0; j <= k; ++j) {
      if (P[static_cast<size_t>(j)] == 0.0) continue;
      for (int n = 0; n < r; ++n) {
        Complex xn = c.omega_pow(n) * x;
        Complex t = P[static_cast<size_t>(j)] * c.theta_pow(-j) * c.omega_pow(static_cast<long>(k) * n) *
                    std::pow(xn, -j) / static_cast<double>(r);
        coef[static_cast<size_t>(n)][static_cast<size_t>(k - j)] += t;
      }
    }
  }
  return coef;
}

}  // namespace

Complex mehler_V_apply(const MehlerWeight& w, const std::function<Complex(Complex)>& f, Complex x, Exec exec) {
  if (x == 0.0) throw DomainError("the Mehler form of V contains x^{-j}; x = 0 is excluded");
  int r = w.mu.r();
  CyclicStructure c(r);
  auto coef = v_coefficients(w, x);
  std::vector<Complex> rot(static_cast<size_t>(r));
  for (int n = 0; n < r; ++n) rot[static_cast<size_t>(n)] = c.omega_pow(n) * x;
  auto integrand = [&](std::span<const double> v) {
    double u = radial(v, r);
    Complex s = 0.0;
    for (int n = 0; n < r; ++n) {
      Complex poly = 0.0;
      for (int e = r - 1; e >= 0; --e) poly = poly * u + coef[static_cast<size_t>(n)][static_cast<size_t>(e)];
      s += poly * f(rot[static_cast<size_t>(n)] * u);
    }
    return s;
  };
  return w.c_norm * integrate(w, exec, integrand);
}

Complex mehler_E(const MehlerWeight& w, Complex x, Exec exec) {
  if (x == 0.0) throw DomainError("the Mehler integrand of E_mu contains x^{-j}; x = 0 is excluded");
  Complex theta = CyclicStructure(w.mu.r()).theta;
  return mehler_V_apply(w, [theta](Complex y) { return std::exp(theta * y); }, x, exec);
}

}  // namespace rdunkl
