#include "rdunkl/riemann_liouville.hpp"

#include <algorithm>
#include <cmath>

#include "rdunkl/errors.hpp"
#include "rdunkl/quadrature.hpp"

namespace rdunkl {

double rl_coefficient(double alpha, int n, int r) {
  if (n < 0) throw DomainError("R_alpha is not defined on negative powers");
  return std::beta((n + 1.0) / r, alpha) / r;
}

LaurentSeries apply_R_series(double alpha, const LaurentSeries& f, int r) {
  if (!(alpha > 0.0)) throw ParameterError("R_alpha needs alpha > 0");
  if (f.has_principal_part()) throw DomainError("R_alpha applied to a series with a principal part");
  std::vector<Complex> v(f.coeffs().size());
  for (int n = std::max(0, f.n_min()); n <= f.n_max(); ++n)
    v[static_cast<size_t>(n - f.n_min())] = rl_coefficient(alpha, n, r) * f[n];
  LaurentSeries out(f.n_min(), std::move(v), f.valid_order());
  if (f.grade()) return out.with_grade(f.grade()->k, f.grade()->r);
  return out;
}

LaurentSeries apply_R_inverse_series(double order, const LaurentSeries& f, int r) {
  if (!(order > 0.0)) throw ParameterError("R^{-1} needs a positive order");
  if (f.has_principal_part()) throw DomainError("R^{-1} applied to a series with a principal part");
  std::vector<Complex> v(f.coeffs().size());
  for (int n = std::max(0, f.n_min()); n <= f.n_max(); ++n)
    v[static_cast<size_t>(n - f.n_min())] = f[n] / rl_coefficient(order, n, r);
  LaurentSeries out(f.n_min(), std::move(v), f.valid_order());
  if (f.grade()) return out.with_grade(f.grade()->k, f.grade()->r);
  return out;
}

namespace {

double geometric(double t, int r) {
  double s = 0.0, p = 1.0;
  for (int j = 0; j < r; ++j, p *= t) s += p;
  return s;
}

// int_0^S f(s) s^q ds: Gauss-Jacobi on [0, min(1,S)], Gauss-Legendre panels in log s beyond.
template <class F>
Complex half_line_integral(double q, double S, int n_nodes, F&& f) {
  if (!(S > 0.0)) return 0.0;
  double L = std::min(1.0, S);
  QuadratureRule jac = gauss_jacobi_rule(0.0, q, n_nodes);
  Complex acc = 0.0;
  for (size_t i = 0; i < jac.size(); ++i) acc += jac.weights[i] * f(L * jac.nodes[i]);
  acc *= std::pow(L, q + 1.0);
  if (S > 1.0) {
    double top = std::log(S);
    int panels = std::max(1, static_cast<int>(std::ceil(top / 0.5)));
    QuadratureRule gl = composite_legendre_rule(panels, 16, 0.0, top);
    Complex tail = 0.0;
    for (size_t i = 0; i < gl.size(); ++i) {
      double s = std::exp(gl.nodes[i]);
      tail += gl.weights[i] * std::pow(s, q + 1.0) * f(s);
    }
    acc += tail;
  }
  return acc;
}

// m-th derivative by the central stencil with one Richardson step.
template <class F>
std::pair<Complex, double> richardson_derivative(F&& f, double Y, double h, int m) {
  auto stencil = [&](double step) {
    Complex s = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= m; ++i) {
      double sign = (i % 2 == 0) ? 1.0 : -1.0;
      s += sign * binom * f(Y + (0.5 * m - i) * step);
      binom = binom * (m - i) / (i + 1);
    }
    return s / std::pow(step, m);
  };
  Complex d1 = stencil(h);
  Complex d2 = stencil(0.5 * h);
  Complex rich = (4.0 * d2 - d1) / 3.0;
  double est = std::abs(rich - d2) / std::max(std::abs(rich), 1e-300);
  return {rich, est};
}

}  // namespace

Complex apply_R_quadrature(double alpha, const ComplexFn& g, Complex x, int r, int n_nodes) {
  if (!(alpha > 0.0)) throw ParameterError("R_alpha needs alpha > 0");
  QuadratureRule rule = gauss_jacobi_rule(alpha - 1.0, 0.0, n_nodes);
  Complex acc = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) {
    double t = rule.nodes[i];
    acc += rule.weights[i] * std::pow(geometric(t, r), alpha - 1.0) * g(x * t);
  }
  return acc;
}

double derivative_form_constant(int k, double alpha, int r) {
  return static_cast<double>(r) * r / (std::tgamma(k + alpha) * std::tgamma(1.0 - alpha));
}

double derivative_form_constant_literal(int k, double alpha, int r) {
  return static_cast<double>(r) * r / (std::tgamma(k + 1.0) * std::tgamma(alpha) * std::tgamma(1.0 - alpha));
}

DerivativeFormResult apply_R_inverse_derivative_form(int k, double alpha, const ComplexFn& g, double x, int r,
                                                     int n_nodes, double fd_step) {
  if (k < 0 || !(alpha > 0.0 && alpha < 1.0)) throw ParameterError("derivative form needs k >= 0, 0 < alpha < 1");
  if (!(x > 0.0)) throw DomainError("derivative form needs x > 0");
  if (fd_step <= 0.0) fd_step = 1e-3 * x;
  // Inner integral in s = u/y: weight (1-s)^{-alpha} s^{(k+alpha) r}, smooth factor ((1-s^r)/(1-s))^{-alpha}.
  QuadratureRule rule = gauss_jacobi_rule(-alpha, (k + alpha) * r, n_nodes);
  auto inner = [&](double Y) {
    double y = std::pow(Y, 1.0 / r);
    Complex acc = 0.0;
    for (size_t i = 0; i < rule.size(); ++i) {
      double s = rule.nodes[i];
      acc += rule.weights[i] * std::pow(geometric(s, r), -alpha) * g(y * s);
    }
    return std::pow(y, k * r + 1.0) * acc;
  };
  double Y = std::pow(x, r);
  double h = r * std::pow(x, r - 1) * fd_step;
  auto [d, est] = richardson_derivative(inner, Y, h, k + 1);
  DerivativeFormResult res;
  res.value = derivative_form_constant(k, alpha, r) * std::pow(x, r - 1) * d;
  res.error_estimate = est;
  res.convergence_warning = est > 1e-4;
  return res;
}

Complex apply_R_adjoint(double beta, double a, const ComplexFn& g, Complex z, int r, double Tmax, int n_nodes) {
  if (!(beta > 0.0)) throw ParameterError("R*_beta needs beta > 0");
  double u = std::abs(z);
  if (u == 0.0) throw DomainError("R* is evaluated on rays away from the origin");
  double S = std::pow(Tmax / u, r) - 1.0;
  // (1/r) int_0^S g(z (1+s)^{1/r}) s^{beta-1} (1+s)^{a/r - beta} ds.
  auto f = [&](double s) { return g(z * std::pow(1.0 + s, 1.0 / r)) * std::pow(1.0 + s, a / r - beta); };
  return half_line_integral(beta - 1.0, S, n_nodes, f) / static_cast<double>(r);
}

Complex apply_R_adjoint_inverse(double beta, double a, const ComplexFn& K, Complex z, int r,
                                const AdjointInverseOptions& opt) {
  if (!(beta > 0.0)) throw ParameterError("R*_beta needs beta > 0");
  double u = std::abs(z);
  if (u == 0.0) throw DomainError("R*^{-1} is evaluated on rays away from the origin");
  Complex dir = z / u;
  double Y = std::pow(u, r);
  int n = static_cast<int>(std::ceil(beta - 1e-12));
  double nu = n - beta;
  double gb = std::tgamma(beta);
  // psi(y) = (r/Gamma(beta)) y^{a/r} K(dir y^{1/r}) = W^beta phi(y).
  auto psi = [&](double y) { return (r / gb) * std::pow(y, a / r) * K(dir * std::pow(y, 1.0 / r)); };
  double ymax = std::pow(opt.Tmax, r);
  auto weyl = [&](double y) -> Complex {
    if (nu < 1e-12) return psi(y);
    auto f = [&](double s) { return psi(y + s); };
    return half_line_integral(nu - 1.0, ymax - y, opt.n_nodes, f) / std::tgamma(nu);
  };
  Complex phi;
  if (n == 0) {
    phi = weyl(Y);
  } else {
    double h = std::min(opt.fd_step * Y, Y / n);
    auto [d, est] = richardson_derivative(weyl, Y, h, n);
    (void)est;
    phi = (n % 2 == 0 ? 1.0 : -1.0) * d;
  }
  return phi * std::pow(u, r * beta - a);
}

LaurentSeries factorization_chain(const IndexVector& mu, int n_max) {
  int r = mu.r();
  LaurentSeries f = cos_r_series(r, n_max);
  std::vector<Complex> v = f.coeffs();
  for (int i = 0; i < r; ++i) {
    if (std::abs(mu.a(i)) <= 1e-14) continue;
    double beta = mu.alpha(i) + static_cast<double>(i) / r;
    if (!(beta > 0.0)) throw ParameterError("factorization needs alpha_i + i/r > 0 on included dimensions");
    double c = r * std::tgamma(mu.alpha(i) + 1.0) / (std::tgamma(beta) * std::tgamma(1.0 - static_cast<double>(i) / r));
    int p = r - i - 1;
    for (int n = 0; n <= n_max; ++n) v[static_cast<size_t>(n)] *= c * rl_coefficient(beta, n + p, r);
  }
  return LaurentSeries(0, std::move(v), n_max, Grade{0, r});
}

VerificationReport product_factorization_check(const IndexVector& mu, int n_max, double tolerance) {
  double res = relative_coeff_diff(factorization_chain(mu, n_max), bessel_j_series(mu, n_max));
  return VerificationReport::bound("rl.product_factorization", {{"r", mu.r()}, {"alpha", mu.alphas()}, {"degree", n_max}},
                                   res, tolerance);
}

std::vector<VerificationReport> composition_law_check(int k, double alpha, int r, int n_max, double tolerance) {
  double fix = std::tgamma(k + alpha) / (std::tgamma(k + 1.0) * std::tgamma(alpha));
  double res = 0.0, res_lit = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    double lhs = rl_coefficient(k + alpha, n, r);
    double rhs = rl_coefficient(k + 1.0, n, r) * (n + 1.0 + r * k) * rl_coefficient(alpha, n + r * k, r);
    res = std::max(res, std::abs(lhs - fix * rhs) / std::abs(lhs));
    res_lit = std::max(res_lit, std::abs(lhs - rhs) / std::abs(lhs));
  }
  nlohmann::json params = {{"k", k}, {"alpha", alpha}, {"r", r}, {"degree", n_max}};
  return {VerificationReport::bound("rl.composition_law", params, res, tolerance,
                                    {"right side scaled by Gamma(k+alpha)/(k! Gamma(alpha))"}),
          VerificationReport::info("rl.composition_law_unscaled", params, res_lit,
                                   {"unscaled law; off by k! Gamma(alpha)/Gamma(k+alpha) for k >= 1"})};
}

}  // namespace rdunkl
