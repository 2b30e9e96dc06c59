#include "rdunkl/special_functions.hpp"

#include <cmath>
#include <sstream>

#include "rdunkl/errors.hpp"
#include "rdunkl/quadrature.hpp"

namespace rdunkl {

namespace {

bool near_nonpositive_integer(double x) {
  double n = std::round(x);
  return n <= 0.0 && std::abs(x - n) < 1e-12;
}

using LComplex = std::complex<long double>;

}  // namespace

IndexVector::IndexVector(std::vector<double> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.size() < 2) throw ParameterError("index vector needs r >= 2 entries");
  for (size_t k = 0; k < alpha_.size(); ++k) {
    if (!std::isfinite(alpha_[k])) throw ParameterError("alpha entries must be finite");
    if (near_nonpositive_integer(alpha_[k]) && std::round(alpha_[k]) <= -1.0) {
      std::ostringstream os;
      os << "alpha_" << k << " = " << alpha_[k] << " is a negative integer";
      throw ParameterError(os.str());
    }
  }
}

std::vector<double> IndexVector::a_values() const {
  std::vector<double> a(alpha_.size());
  for (int k = 0; k < r(); ++k) a[static_cast<size_t>(k)] = this->a(k);
  return a;
}

IndexVector IndexVector::degenerate(int r) {
  std::vector<double> v(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) v[static_cast<size_t>(k)] = -static_cast<double>(k) / r;
  return IndexVector(std::move(v));
}

bool IndexVector::is_degenerate(double tol) const {
  for (int k = 0; k < r(); ++k)
    if (std::abs(a(k)) > tol) return false;
  return true;
}

double pochhammer(double beta, int n) {
  if (n < 0) throw ParameterError("pochhammer order must be non-negative");
  if (near_nonpositive_integer(beta) && std::round(beta) > -n)
    throw PoleError("pochhammer factor vanishes for beta = " + std::to_string(beta));
  if (n <= 64) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= beta + j;
    return p;
  }
  // Gamma(beta+n)/Gamma(beta) with the sign of each Gamma tracked separately.
  auto gamma_sign = [](double x) {
    if (x > 0) return 1.0;
    return (static_cast<long>(std::ceil(-x)) % 2 == 0) ? 1.0 : -1.0;
  };
  double lg = std::lgamma(beta + n) - std::lgamma(beta);
  return gamma_sign(beta + n) * gamma_sign(beta) * std::exp(lg);
}

LaurentSeries bessel_j_series(const IndexVector& mu, int n_max) {
  int r = mu.r();
  std::vector<Complex> v(static_cast<size_t>(n_max + 1));
  double rr = std::pow(static_cast<double>(r), r);
  double c = 1.0;
  for (int n = 0; n * r <= n_max; ++n) {
    if (n > 0) {
      double den = rr;
      for (int k = 0; k < r; ++k) {
        double f = mu.alpha(k) + n;
        if (near_nonpositive_integer(f) && std::abs(f) < 1e-12) throw PoleError("(alpha_k + 1)_n vanishes");
        den *= f;
      }
      c = -c / den;
    }
    v[static_cast<size_t>(n * r)] = c;
  }
  return LaurentSeries(0, std::move(v), n_max, Grade{0, r});
}

LaurentSeries cos_r_series(int r, int n_max) {
  std::vector<Complex> v(static_cast<size_t>(n_max + 1));
  double c = 1.0;
  for (int n = 0; n * r <= n_max; ++n) {
    if (n > 0) {
      double den = 1.0;
      for (int i = 0; i < r; ++i) den *= static_cast<double>(n * r - i);
      c = -c / den;
    }
    v[static_cast<size_t>(n * r)] = c;
  }
  return LaurentSeries(0, std::move(v), n_max, Grade{0, r});
}

namespace {

// sum_n t_n where t_n = t_{n-1} * step(n), stopping once past the peak and negligible.
template <class Step>
LComplex sum_terms(Step step, long double magnitude, int r) {
  LComplex sum = 1.0L, term = 1.0L;
  for (int n = 1; n < 20000; ++n) {
    term *= step(n);
    sum += term;
    if (static_cast<long double>(n) * r > magnitude &&
        std::abs(term) <= 1e-19L * std::max(std::abs(sum), 1e-300L))
      break;
  }
  return sum;
}

}  // namespace

Complex j_mu_value(const IndexVector& mu, Complex z) {
  int r = mu.r();
  LComplex zr = std::pow(LComplex(z.real(), z.imag()), r);
  long double rr = std::pow(static_cast<long double>(r), r);
  auto step = [&](int n) {
    long double den = rr;
    for (int k = 0; k < r; ++k) den *= static_cast<long double>(mu.alpha(k)) + n;
    return -zr / den;
  };
  LComplex s = sum_terms(step, std::abs(z), r);
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

Complex cos_r_value(int r, Complex z) {
  LComplex zr = std::pow(LComplex(z.real(), z.imag()), r);
  auto step = [&](int n) {
    long double den = 1.0L;
    for (int i = 0; i < r; ++i) den *= static_cast<long double>(n * r - i);
    return -zr / den;
  };
  LComplex s = sum_terms(step, std::abs(z), r);
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

Complex dunkl_kernel_value(const IndexVector& mu, Complex z, double range) {
  int r = mu.r();
  if (std::abs(z) > range) {
    std::ostringstream os;
    os << "|z| = " << std::abs(z) << " exceeds the reliable series range " << range;
    throw SeriesOverflowError(os.str());
  }
  std::vector<double> a = mu.a_values();
  bool principal = std::abs(a[0]) > 1e-14;
  if (z == 0.0) {
    if (principal) throw DomainError("E_mu has a pole at 0 when alpha_0 != 0");
    return 1.0;
  }
  CyclicStructure cs(r);
  LComplex zl(z.real(), z.imag());
  LComplex zinv = 1.0L / zl;
  LComplex zr = std::pow(zl, r);
  long double rr = std::pow(static_cast<long double>(r), r);
  std::vector<LComplex> theta_inv(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) {
    Complex t = cs.theta_pow(-k);
    theta_inv[static_cast<size_t>(k)] = LComplex(t.real(), t.imag());
  }
  // Block n collects c_n theta^{-k} prod_{i<k}(nr - i + a_i) z^{nr-k}, k = 0..r-1.
  auto block = [&](int n) {
    LComplex acc = 0.0L, zpow = 1.0L;
    long double prod = 1.0L;
    for (int k = 0; k < r; ++k) {
      if (k > 0) {
        prod *= static_cast<long double>(n * r - (k - 1)) + a[static_cast<size_t>(k - 1)];
        zpow *= zinv;
      }
      acc += theta_inv[static_cast<size_t>(k)] * prod * zpow;
    }
    return acc;
  };
  LComplex sum = block(0), c = 1.0L, zn = 1.0L;
  long double mag = std::abs(z);
  for (int n = 1; n < 20000; ++n) {
    long double den = rr;
    for (int k = 0; k < r; ++k) den *= static_cast<long double>(mu.alpha(k)) + n;
    c = -c / den;
    zn *= zr;
    LComplex term = c * zn * block(n);
    sum += term;
    if (static_cast<long double>(n) * r > mag && std::abs(term) <= 1e-19L * std::max(std::abs(sum), 1e-300L)) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

double beta_lemma_quadrature(double x, double y, int r, int n_nodes) {
  if (!(x > 0) || !(y > 0)) throw ParameterError("beta lemma needs x, y > 0");
  QuadratureRule rule = gauss_jacobi_rule(y - 1.0, r * x - 1.0, n_nodes);
  double s = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) {
    double u = rule.nodes[i];
    double geo = 0.0, p = 1.0;
    for (int j = 0; j < r; ++j, p *= u) geo += p;
    s += rule.weights[i] * std::pow(geo, y - 1.0);
  }
  return r * s;
}

}  // namespace rdunkl
