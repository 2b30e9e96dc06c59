#include "rdunkl/operators.hpp"

#include <cmath>

#include "rdunkl/errors.hpp"

namespace rdunkl {

namespace {

LaurentSeries lower_degree(const LaurentSeries& f, const std::vector<double>& shift_by_degree_class, int r) {
  if (f.empty()) return f;
  CyclicStructure c(r);
  std::vector<Complex> v(f.coeffs().size());
  for (int n = f.n_min(); n <= f.n_max(); ++n)
    v[static_cast<size_t>(n - f.n_min())] = (n + shift_by_degree_class[static_cast<size_t>(c.mod(-n))]) * f[n];
  LaurentSeries out(f.n_min() - 1, std::move(v), f.valid_order() - 1);
  if (f.grade()) return out.with_grade(f.grade()->k + 1, f.grade()->r);
  return out;
}

}  // namespace

LaurentSeries apply_L(double a, const LaurentSeries& f) {
  if (f.empty()) return f;
  std::vector<Complex> v(f.coeffs().size());
  for (int n = f.n_min(); n <= f.n_max(); ++n) v[static_cast<size_t>(n - f.n_min())] = (n + a) * f[n];
  LaurentSeries out(f.n_min() - 1, std::move(v), f.valid_order() - 1);
  if (f.grade()) return out.with_grade(f.grade()->k + 1, f.grade()->r);
  return out;
}

LaurentSeries apply_D(const IndexVector& mu, const LaurentSeries& f) {
  return lower_degree(f, mu.a_values(), mu.r());
}

LaurentSeries apply_Delta(const IndexVector& mu, const LaurentSeries& f) {
  CyclicStructure c(mu.r());
  LaurentSeries total;
  for (int k = 0; k < mu.r(); ++k) {
    LaurentSeries part = project_T(c, k, f);
    for (int i = 0; i < mu.r(); ++i) part = apply_L(mu.a(c.mod(k + i)), part);
    total = total.empty() ? part : total + part;
  }
  if (f.grade()) return total.with_grade(f.grade()->k, f.grade()->r);
  return total.without_grade();
}

LaurentSeries dunkl_kernel_E(const IndexVector& mu, Complex lambda, int n_max) {
  CyclicStructure c(mu.r());
  LaurentSeries j = bessel_j_series(mu, n_max);
  LaurentSeries acc = j.without_grade();
  LaurentSeries cur = j;
  for (int k = 1; k < mu.r(); ++k) {
    cur = apply_D(mu, cur);
    acc = acc + cur.without_grade() * c.theta_pow(-k);
  }
  acc = acc.with_valid_order(n_max - mu.r() + 1);
  if (lambda == Complex(1.0)) return acc;
  return acc.rescaled(lambda);
}

VerificationReport case_recurrence_check(const IndexVector& mu, int n_max, double tolerance) {
  int r = mu.r();
  LaurentSeries lhs = apply_D(mu, bessel_j_series(mu, n_max));
  LaurentSeries rhs;
  std::string which;
  if (std::abs(mu.alpha(0)) > 1e-14) {
    which = "alpha_0 != 0";
    std::vector<double> lowered = mu.alphas();
    lowered[0] -= 1.0;
    rhs = mul_x_power(bessel_j_series(IndexVector(lowered), n_max), -1) * Complex(r * mu.alpha(0));
  } else {
    which = "alpha_0 = 0";
    double prod = 1.0;
    for (int k = 1; k < r; ++k) prod *= mu.alpha(k) + 1.0;
    double scale = -1.0 / (prod * std::pow(static_cast<double>(r), r - 1));
    std::vector<double> raised = mu.alphas();
    for (int k = 1; k < r; ++k) raised[static_cast<size_t>(k)] += 1.0;
    rhs = mul_x_power(bessel_j_series(IndexVector(raised), n_max), r - 1) * Complex(scale);
  }
  double res = relative_coeff_diff(lhs, rhs);
  nlohmann::json params = {{"r", r}, {"alpha", mu.alphas()}, {"case", which}, {"degree", n_max}};
  return VerificationReport::bound("eigen.case_recurrence", params, res, tolerance);
}

KlyuchantsevCoefficients klyuchantsev_P(const std::vector<double>& a_prefix, int k) {
  if (k < 0 || static_cast<int>(a_prefix.size()) < k) throw ParameterError("klyuchantsev_P needs k <= len(a)");
  auto p = [&](int m) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v *= m - i + a_prefix[static_cast<size_t>(i)];
    return v;
  };
  auto falling = [](int m, int s) {
    double v = 1.0;
    for (int i = 0; i < s; ++i) v *= m - i;
    return v;
  };
  auto binom = [](int n, int j) {
    if (j < 0 || j > n) return 0.0;
    double v = 1.0;
    for (int i = 1; i <= j; ++i) v = v * (n - j + i) / i;
    return v;
  };
  KlyuchantsevCoefficients out;
  out.P.assign(static_cast<size_t>(k + 1), 0.0);
  // p(m) = sum_s P_{k-s} m^{(s)} with falling factorials; solve for m = 0..k.
  for (int m = 0; m <= k; ++m) {
    double rest = p(m);
    for (int s = 0; s < m; ++s) rest -= out.P[static_cast<size_t>(k - s)] * falling(m, s);
    out.P[static_cast<size_t>(k - m)] = rest / falling(m, m);
  }
  out.closed_form_literal.assign(static_cast<size_t>(k + 1), 0.0);
  out.closed_form_difference.assign(static_cast<size_t>(k + 1), 0.0);
  for (int s = 0; s <= k; ++s) {
    double lit = 0.0, diff = 0.0;
    for (int j = 0; j <= s; ++j) {
      double sign = ((s - j) % 2 == 0) ? 1.0 : -1.0;
      double prod_plus = 1.0;
      for (int i = 0; i < k; ++i) prod_plus *= a_prefix[static_cast<size_t>(i)] + i + j;
      lit += sign * binom(s - j, j) * prod_plus;
      diff += sign * binom(s, j) * p(j);
    }
    out.closed_form_literal[static_cast<size_t>(k - s)] = lit / std::tgamma(s + 1.0);
    out.closed_form_difference[static_cast<size_t>(k - s)] = diff / std::tgamma(s + 1.0);
  }
  for (int j = 0; j <= k; ++j)
    out.literal_disagreement = std::max(out.literal_disagreement,
                                        std::abs(out.P[static_cast<size_t>(j)] - out.closed_form_literal[static_cast<size_t>(j)]));
  return out;
}

}  // namespace rdunkl
