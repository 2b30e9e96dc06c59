#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rdunkl/mehler.hpp"
#include "rdunkl/report.hpp"
#include "rdunkl/riemann_liouville.hpp"
#include "rdunkl/series.hpp"
#include "rdunkl/special_functions.hpp"

namespace rdunkl {

// V_mu on x^0..x^N as a band: input degree n lands on degrees n-j, 0 <= j <= r-1.
//   V x^n = T_0[C(n) x^n] + sum_{k=1}^{r-1} sum_{j=0}^{k} P^{(k)}_j theta^{-j} T_k[C(n+k-j) x^{n-j}]
// where C(m) = prod_i c_i l^{beta_i}_{m+r-i-1} over dimensions with a_i != 0.
class TransmutationOperator {
 public:
  TransmutationOperator(const IndexVector& mu, int N);

  const IndexVector& mu() const { return mu_; }
  int N() const { return N_; }
  double c_mu() const { return c_mu_; }
  // Chain factor on x^m including the constants c_i.
  double chain(int m) const;
  // P^{(k)} for k = 1..r-1 (index 0 unused).
  const std::vector<std::vector<double>>& P() const { return P_; }
  // Coefficient of x^{n-j} in V x^n.
  Complex entry(int n, int j) const;

  // DomainError on a principal part, ParameterError above degree N.
  LaurentSeries apply(const LaurentSeries& f) const;
  // Back substitution on degrees >= 0; SingularError on a diagonal below 1e-300.
  LaurentSeries inverse(const LaurentSeries& f) const;

 private:
  IndexVector mu_;
  int N_;
  double c_mu_ = 1.0;
  std::vector<double> c_i_;
  std::vector<double> beta_;
  std::vector<int> dims_;
  std::vector<std::vector<double>> P_;
  std::vector<std::vector<Complex>> band_;  // band_[n][j]
};

TransmutationOperator build_V(const IndexVector& mu, int N);
LaurentSeries apply_V_inverse(const TransmutationOperator& V, const LaurentSeries& f);

VerificationReport v_maps_exp_to_kernel_check(const IndexVector& mu, Complex lambda, int N, double tolerance = 1e-11);

// Relative coefficient residual of D_mu V f - V f' over common valid degrees.
double transmutation_residual_value(const TransmutationOperator& V, const LaurentSeries& f);
VerificationReport transmutation_residual(const IndexVector& mu, const LaurentSeries& f, int N, const std::string& check_id,
                                          CheckKind kind, double tolerance);

// max_k sum_n |c_n| e^{pi |n Im(omega^k)|}.
double fourier_condition_value(const std::map<int, Complex>& coeffs, const CyclicStructure& c);
// Taylor series of sum_n c_n e^{2 i pi n x / T} through degree N.
LaurentSeries fourier_sum_series(const std::map<int, Complex>& coeffs, double T, int N);

struct VStarOptions {
  double Tmax = 8.0;
  int n_nodes = 48;
};

// V*_mu with respect to <.,.>_a:
//   c_mu [Chain* T_0 + sum_{k,j} conj(P_j theta^{-j}) conj(x)^{k-j} Chain* conj(x)^{-k} T_k],
//   Chain* = prod_i conj(x)^{p_i} R*_{beta_i} conj(x)^{-p_i}, p_i = r - i - 1.
class VStar {
 public:
  VStar(const IndexVector& mu, double a, VStarOptions opt = {});
  Complex operator()(const ComplexFn& g, Complex z) const;
  ComplexFn apply(ComplexFn g) const;

 private:
  Complex chain(const ComplexFn& h, Complex z, size_t depth) const;

  IndexVector mu_;
  double a_;
  VStarOptions opt_;
  double c_mu_ = 1.0;
  std::vector<double> beta_;
  std::vector<int> p_;
  // coef_[e][k]: coefficient of conj(x)^e Chain* conj(x)^{-k} T_k.
  std::vector<std::vector<Complex>> coef_;
};

}  // namespace rdunkl
