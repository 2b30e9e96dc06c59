#pragma once

#include <vector>

#include "rdunkl/series.hpp"

namespace rdunkl {

// mu = (alpha_0, ..., alpha_{r-1}); no alpha_k may be a negative integer.
class IndexVector {
 public:
  explicit IndexVector(std::vector<double> alpha);

  int r() const { return static_cast<int>(alpha_.size()); }
  double alpha(int k) const { return alpha_[static_cast<size_t>(k)]; }
  const std::vector<double>& alphas() const { return alpha_; }
  // a_k = r alpha_k + k.
  double a(int k) const { return r() * alpha(k) + k; }
  std::vector<double> a_values() const;
  CyclicStructure cyclic() const { return CyclicStructure(r()); }

  // alpha_k = -k/r for every k; D reduces to d/dx.
  static IndexVector degenerate(int r);
  bool is_degenerate(double tol = 1e-14) const;

 private:
  std::vector<double> alpha_;
};

// (beta)_n with lgamma beyond n = 64; PoleError when a factor vanishes.
double pochhammer(double beta, int n);

// j_mu through degree n_max, supported on multiples of r.
LaurentSeries bessel_j_series(const IndexVector& mu, int n_max);
// cos_r(x) = sum_n (-1)^n x^{nr} / (nr)! through degree n_max.
LaurentSeries cos_r_series(int r, int n_max);

// Point values by summation until terms fall below 1e-17 relative.
Complex j_mu_value(const IndexVector& mu, Complex z);
Complex cos_r_value(int r, Complex z);
// E_mu(z) from the series, accumulated in long double.
// Throws SeriesOverflowError for |z| > range, DomainError at z = 0 with alpha_0 != 0.
Complex dunkl_kernel_value(const IndexVector& mu, Complex z, double range = 32.0);

// Gauss-Jacobi estimate of int_0^1 (1-u^r)^{y-1} u^{rx-1} du, scaled by r.
double beta_lemma_quadrature(double x, double y, int r, int n_nodes = 48);

}  // namespace rdunkl
