#pragma once

#include <vector>

#include "rdunkl/report.hpp"
#include "rdunkl/series.hpp"
#include "rdunkl/special_functions.hpp"

namespace rdunkl {

// L_a x^n = (n + a) x^{n-1}.
LaurentSeries apply_L(double a, const LaurentSeries& f);
// D x^n = (n + a_{(-n) mod r}) x^{n-1}.
LaurentSeries apply_D(const IndexVector& mu, const LaurentSeries& f);
// On grade k: L_{a_{k+r-1}} ... L_{a_{k+1}} L_{a_k}; on grade 0 this is L_{a_{r-1}} ... L_{a_0}.
LaurentSeries apply_Delta(const IndexVector& mu, const LaurentSeries& f);

// Series of x -> E_mu(lambda x): sum_k theta^{-k} D^k j_mu, then degree d scaled by lambda^d.
// Valid through n_max - r + 1.
LaurentSeries dunkl_kernel_E(const IndexVector& mu, Complex lambda, int n_max);

// D j_mu against the shifted-index closed form: alpha_0 != 0 lowers alpha_0 by one,
// alpha_0 = 0 raises alpha_1..alpha_{r-1} by one.
VerificationReport case_recurrence_check(const IndexVector& mu, int n_max, double tolerance = 1e-12);

struct KlyuchantsevCoefficients {
  // L_{a_{k-1}} ... L_{a_0} = sum_j P[j] x^{k-j} (d/dx)^{k-j} x^{-k}, as operators on x^m.
  std::vector<double> P;
  // The binomial closed form read literally with C^j_{s-j} and factors (a_i + i + j).
  std::vector<double> closed_form_literal;
  // Forward differences: P_{k-s} = (1/s!) sum_j (-1)^{s-j} binom(s, j) p(j), p(m) = prod_i (m - i + a_i).
  std::vector<double> closed_form_difference;
  double literal_disagreement = 0.0;
};

KlyuchantsevCoefficients klyuchantsev_P(const std::vector<double>& a_prefix, int k);

}  // namespace rdunkl
