#pragma once

#include <functional>
#include <vector>

#include "rdunkl/quadrature.hpp"
#include "rdunkl/series.hpp"
#include "rdunkl/special_functions.hpp"

namespace rdunkl {

enum class Exec { Serial, Parallel };

// Product measure over the dimensions i with a_i != 0, after v = u^r:
// prod_i Gamma(alpha_i+1)/(Gamma(beta_i) Gamma(1-i/r)) (1-v)^{beta_i-1} v^{-i/r} dv, beta_i = alpha_i + i/r.
struct MehlerWeight {
  IndexVector mu;
  std::vector<int> included_dims;
  std::vector<double> beta;
  std::vector<QuadratureRule> rules;
  double c_norm = 1.0;
  // prod_i r Gamma(alpha_i+1)/(Gamma(beta_i) Gamma(1-i/r)), the constant in front of the u-measure.
  double c_mu = 1.0;
};

// ParameterError when beta_i <= 0 for an included dimension.
MehlerWeight build_mehler_weight(const IndexVector& mu, int n_nodes_per_dim);

Complex mehler_j(const MehlerWeight& w, Complex x, Exec exec = Exec::Parallel);
// DomainError at x = 0.
Complex mehler_E(const MehlerWeight& w, Complex x, Exec exec = Exec::Parallel);

// V_mu f(x) = c int [T_0 f(xu) + sum_{k>=1} sum_{j<=k} P_j theta^{-j} u^{k-j} T_k[y^{-j} f(yu)](x)] dmu(u),
// with T_k applied in x by r-point averaging. mehler_E is this with f = e^{theta .}.
Complex mehler_V_apply(const MehlerWeight& w, const std::function<Complex(Complex)>& f, Complex x,
                       Exec exec = Exec::Parallel);

}  // namespace rdunkl
