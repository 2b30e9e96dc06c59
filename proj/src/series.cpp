#include "rdunkl/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rdunkl/errors.hpp"

namespace rdunkl {

namespace {

// e^{i pi num / den}, exact on the axes.
Complex unit_root(long num, long den) {
  long m = ((num % (2 * den)) + 2 * den) % (2 * den);
  if ((2 * m) % den == 0) {
    switch ((2 * m) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, std::numbers::pi * static_cast<double>(m) / static_cast<double>(den));
}

}  // namespace

CyclicStructure::CyclicStructure(int r_) : r(r_) {
  if (r < 2) throw ParameterError("cyclic order r must be at least 2, got " + std::to_string(r));
  omega = unit_root(2, r);
  theta = unit_root(1, r);
}

Complex CyclicStructure::omega_pow(long k) const { return unit_root(2 * static_cast<long>(mod(k)), r); }

Complex CyclicStructure::theta_pow(long k) const { return unit_root(k, r); }

int CyclicStructure::mod(long n) const {
  long m = n % r;
  return static_cast<int>(m < 0 ? m + r : m);
}

LaurentSeries::LaurentSeries(int n_min, std::vector<Complex> coeffs)
    : n_min_(n_min), coeffs_(std::move(coeffs)) {
  valid_order_ = n_max();
}

LaurentSeries::LaurentSeries(int n_min, std::vector<Complex> coeffs, int valid_order,
                             std::optional<Grade> grade)
    : n_min_(n_min), coeffs_(std::move(coeffs)), valid_order_(valid_order) {
  if (grade) *this = with_grade(grade->k, grade->r);
}

LaurentSeries LaurentSeries::zero(int n_min, int n_max) {
  if (n_max < n_min) return LaurentSeries(n_min, {}, n_max);
  return LaurentSeries(n_min, std::vector<Complex>(static_cast<size_t>(n_max - n_min + 1)));
}

LaurentSeries LaurentSeries::monomial(int degree, Complex c, int pad) {
  std::vector<Complex> v(static_cast<size_t>(pad + 1));
  v[0] = c;
  return LaurentSeries(degree, std::move(v));
}

LaurentSeries LaurentSeries::exponential(Complex c, int n_max) {
  std::vector<Complex> v(static_cast<size_t>(n_max + 1));
  Complex term = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) term *= c / static_cast<double>(n);
    v[static_cast<size_t>(n)] = term;
  }
  return LaurentSeries(0, std::move(v));
}

Complex LaurentSeries::operator[](int n) const {
  if (n < n_min_ || n > n_max()) return 0.0;
  return coeffs_[static_cast<size_t>(n - n_min_)];
}

double LaurentSeries::max_modulus() const { return max_modulus_through(n_max()); }

double LaurentSeries::max_modulus_through(int n_top) const {
  double m = 0.0;
  for (int n = n_min_; n <= std::min(n_top, n_max()); ++n) m = std::max(m, std::abs((*this)[n]));
  return m;
}

bool LaurentSeries::has_principal_part() const {
  for (int n = n_min_; n < 0 && n <= n_max(); ++n)
    if ((*this)[n] != 0.0) return true;
  return false;
}

LaurentSeries LaurentSeries::with_valid_order(int valid_order) const {
  LaurentSeries out = *this;
  out.valid_order_ = valid_order;
  return out;
}

LaurentSeries LaurentSeries::with_grade(int k, int r) const {
  CyclicStructure c(r);
  int kk = c.mod(k);
  double scale = max_modulus();
  for (int n = n_min_; n <= n_max(); ++n) {
    if (c.mod(n + kk) != 0 && std::abs((*this)[n]) > 1e-13 * scale)
      throw DomainError("series has a nonzero coefficient at degree " + std::to_string(n) +
                        " outside grade " + std::to_string(kk) + " (r = " + std::to_string(r) + ")");
  }
  LaurentSeries out = *this;
  out.grade_ = Grade{kk, r};
  return out;
}

LaurentSeries LaurentSeries::without_grade() const {
  LaurentSeries out = *this;
  out.grade_.reset();
  return out;
}

LaurentSeries LaurentSeries::resized(int n_min, int n_max) const {
  std::vector<Complex> v(static_cast<size_t>(std::max(0, n_max - n_min + 1)));
  for (int n = n_min; n <= n_max; ++n) v[static_cast<size_t>(n - n_min)] = (*this)[n];
  LaurentSeries out(n_min, std::move(v), std::min(valid_order_, n_max));
  out.grade_ = grade_;
  return out;
}

LaurentSeries LaurentSeries::rescaled(Complex s) const {
  LaurentSeries out = *this;
  Complex p = 1.0;
  for (int n = 0; n <= n_max(); ++n) {
    if (n >= n_min_) out.coeffs_[static_cast<size_t>(n - n_min_)] *= p;
    p *= s;
  }
  if (n_min_ < 0) {
    if (s == 0.0) {
      if (has_principal_part()) throw DomainError("rescaling a principal part by zero");
    } else {
      Complex inv = 1.0 / s;
      p = inv;
      for (int n = -1; n >= n_min_; --n) {
        if (n <= n_max()) out.coeffs_[static_cast<size_t>(n - n_min_)] *= p;
        p *= inv;
      }
    }
  }
  return out;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  if (empty()) return o;
  if (o.empty()) return *this;
  int lo = std::min(n_min_, o.n_min_);
  int hi = std::max(n_max(), o.n_max());
  std::vector<Complex> v(static_cast<size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) v[static_cast<size_t>(n - lo)] = (*this)[n] + o[n];
  LaurentSeries out(lo, std::move(v), std::min(valid_order_, o.valid_order_));
  if (grade_ && o.grade_ && grade_->k == o.grade_->k && grade_->r == o.grade_->r) out.grade_ = grade_;
  return out;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(Complex s) const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

Complex LaurentSeries::evaluate(Complex x) const {
  int top = std::min(valid_order_, n_max());
  if (x == 0.0) {
    if (has_principal_part()) throw DomainError("evaluating a principal part at x = 0");
    return (*this)[0];
  }
  int lo = std::max(0, n_min_);
  Complex pos = 0.0;
  for (int n = top; n >= lo; --n) pos = pos * x + (*this)[n];
  if (lo > 0) pos *= std::pow(x, lo);
  Complex neg = 0.0;
  if (n_min_ < 0) {
    Complex inv = 1.0 / x;
    for (int n = n_min_; n <= std::min(-1, top); ++n) neg = (neg + (*this)[n]) * inv;
    if (top < -1) neg *= std::pow(inv, -1 - top);
  }
  return pos + neg;
}

nlohmann::json LaurentSeries::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back({c.real(), c.imag()});
  return {{"n_min", n_min_}, {"coeffs", coeffs}};
}

LaurentSeries LaurentSeries::from_json(const nlohmann::json& j) {
  int n_min = j.at("n_min").get<int>();
  std::vector<Complex> v;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_array()) v.emplace_back(c.at(0).get<double>(), c.size() > 1 ? c.at(1).get<double>() : 0.0);
    else v.emplace_back(c.get<double>(), 0.0);
  }
  LaurentSeries out(n_min, std::move(v));
  if (j.contains("valid_order")) out.valid_order_ = j.at("valid_order").get<int>();
  return out;
}

LaurentSeries s_action(const CyclicStructure& c, int k, const LaurentSeries& f) {
  std::vector<Complex> v(f.coeffs().size());
  for (int n = f.n_min(); n <= f.n_max(); ++n)
    v[static_cast<size_t>(n - f.n_min())] = c.omega_pow(static_cast<long>(k) + n) * f[n];
  LaurentSeries out(f.n_min(), std::move(v), f.valid_order());
  if (f.grade()) return out.with_grade(f.grade()->k, f.grade()->r);
  return out;
}

LaurentSeries project_T(const CyclicStructure& c, int k, const LaurentSeries& f) {
  std::vector<Complex> v(f.coeffs().size());
  for (int n = f.n_min(); n <= f.n_max(); ++n)
    if (c.mod(static_cast<long>(n) + k) == 0) v[static_cast<size_t>(n - f.n_min())] = f[n];
  return LaurentSeries(f.n_min(), std::move(v), f.valid_order(), Grade{c.mod(k), c.r});
}

LaurentSeries differentiate(const LaurentSeries& f) {
  if (f.empty()) return f;
  std::vector<Complex> v(f.coeffs().size());
  for (int n = f.n_min(); n <= f.n_max(); ++n)
    v[static_cast<size_t>(n - f.n_min())] = static_cast<double>(n) * f[n];
  LaurentSeries out(f.n_min() - 1, std::move(v), f.valid_order() - 1);
  if (f.grade()) return out.with_grade(f.grade()->k + 1, f.grade()->r);
  return out;
}

LaurentSeries mul_x_power(const LaurentSeries& f, int m) {
  LaurentSeries out(f.n_min() + m, f.coeffs(), f.valid_order() + m);
  if (f.grade()) return out.with_grade(f.grade()->k - m, f.grade()->r);
  return out;
}

namespace {

std::pair<int, int> window(const LaurentSeries& f, const LaurentSeries& g) {
  return {std::min(f.n_min(), g.n_min()), std::min(f.valid_order(), g.valid_order())};
}

}  // namespace

double max_coeff_diff(const LaurentSeries& f, const LaurentSeries& g) {
  auto [lo, hi] = window(f, g);
  double d = 0.0;
  for (int n = lo; n <= hi; ++n) d = std::max(d, std::abs(f[n] - g[n]));
  return d;
}

double relative_coeff_diff(const LaurentSeries& f, const LaurentSeries& g) {
  auto [lo, hi] = window(f, g);
  double d = 0.0, scale = 0.0;
  for (int n = lo; n <= hi; ++n) {
    d = std::max(d, std::abs(f[n] - g[n]));
    scale = std::max({scale, std::abs(f[n]), std::abs(g[n])});
  }
  return scale > 0.0 ? d / scale : d;
}

}  // namespace rdunkl
