#include "rdunkl/dunkl_opdam.hpp"

#include <algorithm>
#include <cmath>

#include "rdunkl/errors.hpp"

namespace rdunkl {

KappaVector::KappaVector(int r_, std::vector<Complex> k) : r(r_), kappas(std::move(k)) {
  if (r < 2) throw ParameterError("kappa vectors need r >= 2");
  if (static_cast<int>(kappas.size()) != r - 1)
    throw ParameterError("kappa vector for r = " + std::to_string(r) + " needs " + std::to_string(r - 1) + " entries");
}

namespace {

std::vector<Complex> btilde(const KappaVector& kappa) {
  CyclicStructure c(kappa.r);
  std::vector<Complex> b(static_cast<size_t>(kappa.r), 0.0);
  for (int s = 0; s < kappa.r; ++s)
    for (int t = 1; t < kappa.r; ++t) b[static_cast<size_t>(s)] += kappa.kappa(t) * c.omega_pow(-static_cast<long>(s) * t);
  return b;
}

}  // namespace

LaurentSeries apply_T_kappa(const KappaVector& kappa, const LaurentSeries& f) {
  if (f.empty()) return f;
  CyclicStructure c(kappa.r);
  std::vector<Complex> b = btilde(kappa);
  std::vector<Complex> v(f.coeffs().size());
  for (int n = f.n_min(); n <= f.n_max(); ++n) {
    Complex shift = 0.0;
    for (int s = 0; s < kappa.r; ++s) shift += b[static_cast<size_t>(s)] * c.omega_pow(static_cast<long>(s) * n);
    v[static_cast<size_t>(n - f.n_min())] = (static_cast<double>(n) + shift) * f[n];
  }
  LaurentSeries out(f.n_min() - 1, std::move(v), f.valid_order() - 1);
  if (f.grade()) return out.with_grade(f.grade()->k + 1, f.grade()->r);
  return out;
}

std::vector<Complex> kappa_to_a(const KappaVector& kappa) {
  CyclicStructure c(kappa.r);
  std::vector<Complex> b = btilde(kappa);
  // Inverse DFT: a_t = sum_s btilde_s omega^{-st}.
  std::vector<Complex> a(static_cast<size_t>(kappa.r), 0.0);
  for (int t = 0; t < kappa.r; ++t)
    for (int s = 0; s < kappa.r; ++s) a[static_cast<size_t>(t)] += b[static_cast<size_t>(s)] * c.omega_pow(-static_cast<long>(s) * t);
  return a;
}

double kappa_system_residual(const KappaVector& kappa, const std::vector<Complex>& a) {
  CyclicStructure c(kappa.r);
  std::vector<Complex> b = btilde(kappa);
  double res = 0.0;
  for (int s = 0; s < kappa.r; ++s) {
    Complex lhs = 0.0;
    for (int t = 0; t < kappa.r; ++t) lhs += a[static_cast<size_t>(t)] * c.omega_pow(static_cast<long>(s) * t);
    res = std::max(res, std::abs(lhs / static_cast<double>(kappa.r) - b[static_cast<size_t>(s)]));
  }
  return res;
}

KappaSolution a_to_kappa(const std::vector<double>& a) {
  int r = static_cast<int>(a.size());
  CyclicStructure c(r);
  std::vector<Complex> b(static_cast<size_t>(r), 0.0);
  for (int s = 0; s < r; ++s) {
    for (int t = 0; t < r; ++t) b[static_cast<size_t>(s)] += a[static_cast<size_t>(t)] * c.omega_pow(static_cast<long>(s) * t);
    b[static_cast<size_t>(s)] /= static_cast<double>(r);
  }
  std::vector<Complex> khat(static_cast<size_t>(r), 0.0);
  for (int t = 0; t < r; ++t) {
    for (int s = 0; s < r; ++s) khat[static_cast<size_t>(t)] += b[static_cast<size_t>(s)] * c.omega_pow(static_cast<long>(s) * t);
    khat[static_cast<size_t>(t)] /= static_cast<double>(r);
  }
  KappaSolution sol;
  // The t = 0 slot has no kappa to absorb it; it equals a_0 / r.
  sol.residual = std::abs(khat[0]);
  if (sol.residual > 1e-12) return sol;
  sol.kappa = KappaVector(r, std::vector<Complex>(khat.begin() + 1, khat.end()));
  return sol;
}

IndexVector index_vector_from_a(const std::vector<Complex>& a) {
  int r = static_cast<int>(a.size());
  std::vector<double> alpha(a.size());
  for (int k = 0; k < r; ++k) {
    if (std::abs(a[static_cast<size_t>(k)].imag()) > 1e-12)
      throw ParameterError("a_" + std::to_string(k) + " has a nonzero imaginary part");
    alpha[static_cast<size_t>(k)] = (a[static_cast<size_t>(k)].real() - k) / r;
  }
  return IndexVector(std::move(alpha));
}

}  // namespace rdunkl
