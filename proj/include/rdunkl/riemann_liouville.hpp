#pragma once

#include <functional>

#include "rdunkl/report.hpp"
#include "rdunkl/series.hpp"
#include "rdunkl/special_functions.hpp"

namespace rdunkl {

using ComplexFn = std::function<Complex(Complex)>;

// l_n^alpha = (1/r) B((n+1)/r, alpha), the eigenvalue of R_alpha on x^n.
double rl_coefficient(double alpha, int n, int r);

// R_alpha g(x) = int_0^1 g(xt) (1 - t^r)^{alpha-1} dt, diagonal on monomials.
// DomainError if f has a principal part.
LaurentSeries apply_R_series(double alpha, const LaurentSeries& f, int r);
LaurentSeries apply_R_inverse_series(double order, const LaurentSeries& f, int r);

// Gauss-Jacobi in t with weight (1-t)^{alpha-1}; the factor ((1-t^r)/(1-t))^{alpha-1} is smooth.
Complex apply_R_quadrature(double alpha, const ComplexFn& g, Complex x, int r, int n_nodes = 48);

struct DerivativeFormResult {
  Complex value;
  // |D(h) - D(h/2)| relative to |value|, the Richardson difference.
  double error_estimate = 0.0;
  bool convergence_warning = false;
};

// R_{k+alpha}^{-1} g(x) = C x^{r-1} (d/dY)^{k+1} int_0^x g(u) (x^r - u^r)^{-alpha} u^{(k+alpha) r} du, Y = x^r,
// with C = r^2 / (Gamma(k+alpha) Gamma(1-alpha)). fd_step <= 0 selects 1e-3 x.
DerivativeFormResult apply_R_inverse_derivative_form(int k, double alpha, const ComplexFn& g, double x, int r,
                                                     int n_nodes = 48, double fd_step = 0.0);
double derivative_form_constant(int k, double alpha, int r);
// r^2 / (k! Gamma(alpha) Gamma(1-alpha)); agrees with derivative_form_constant only for k = 0.
double derivative_form_constant_literal(int k, double alpha, int r);

// R*_beta g(z) = int_1^inf g(zt) (t^r - 1)^{beta-1} t^{a-1-r(beta-1)} dt along the ray through z.
// Tmax bounds |zt|; beyond it g is treated as zero.
Complex apply_R_adjoint(double beta, double a, const ComplexFn& g, Complex z, int r, double Tmax, int n_nodes = 48);

// Inverse of R*_beta on the ray through z, via the Weyl fractional integral in Y = |z|^r.
struct AdjointInverseOptions {
  double Tmax = 8.0;
  int n_nodes = 48;
  double fd_step = 1e-3;  // relative to Y
};
Complex apply_R_adjoint_inverse(double beta, double a, const ComplexFn& K, Complex z, int r,
                                const AdjointInverseOptions& opt = {});

// j_mu = c_mu prod_i x^{-(r-i-1)} R_{beta_i} x^{r-i-1} cos_r on series.
LaurentSeries factorization_chain(const IndexVector& mu, int n_max);
VerificationReport product_factorization_check(const IndexVector& mu, int n_max, double tolerance = 1e-13);

// R_{k+alpha} against x^{-kr} R_alpha (d/dx) x^{1+rk} R_{k+1} on x^0..x^n_max. The returned reports
// carry the corrected law (factor Gamma(k+alpha)/(k! Gamma(alpha))) and the literal one.
std::vector<VerificationReport> composition_law_check(int k, double alpha, int r, int n_max, double tolerance = 1e-12);

}  // namespace rdunkl
