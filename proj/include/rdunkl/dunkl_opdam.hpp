#pragma once

#include <optional>
#include <vector>

#include "rdunkl/series.hpp"
#include "rdunkl/special_functions.hpp"

namespace rdunkl {

// kappa_1 .. kappa_{r-1}.
struct KappaVector {
  int r;
  std::vector<Complex> kappas;

  KappaVector(int r, std::vector<Complex> kappas);
  Complex kappa(int t) const { return kappas[static_cast<size_t>(t - 1)]; }
};

// T(kappa) = d/dx + (1/x) sum_s btilde_s tau^s, btilde_s = sum_t kappa_t omega^{-st}, tau f(x) = f(omega x).
LaurentSeries apply_T_kappa(const KappaVector& kappa, const LaurentSeries& f);

// Solves (1/r) sum_t a_t omega^{st} = sum_{t>=1} kappa_t omega^{-st} for every s.
std::vector<Complex> kappa_to_a(const KappaVector& kappa);
// Largest residual of the r equations above.
double kappa_system_residual(const KappaVector& kappa, const std::vector<Complex>& a);

struct KappaSolution {
  std::optional<KappaVector> kappa;
  // The consistency scalar |a_0| / r; a solution exists iff it vanishes.
  double residual = 0.0;
  bool solvable() const { return kappa.has_value(); }
};

KappaSolution a_to_kappa(const std::vector<double>& a);
// Real a_k as an index vector, alpha_k = (a_k - k)/r; ParameterError if some Im a_k exceeds 1e-12.
IndexVector index_vector_from_a(const std::vector<Complex>& a);

}  // namespace rdunkl
