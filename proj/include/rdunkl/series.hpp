#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace rdunkl {

using Complex = std::complex<double>;

// Cyclic group of order r acting on the complex line.
struct CyclicStructure {
  int r;
  Complex omega;  // e^{2 i pi / r}
  Complex theta;  // e^{i pi / r}

  explicit CyclicStructure(int r);
  // omega^k for any integer k, reduced mod r before exponentiation.
  Complex omega_pow(long k) const;
  Complex theta_pow(long k) const;
  int mod(long n) const;
};

// The series is supported on degrees n with n = -k (mod r).
struct Grade {
  int k;
  int r;
};

// Truncated Laurent series sum_{n = n_min}^{n_max} c_n x^n.
// Coefficients above valid_order are stored but not trusted.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int n_min, std::vector<Complex> coeffs);
  LaurentSeries(int n_min, std::vector<Complex> coeffs, int valid_order,
                std::optional<Grade> grade = std::nullopt);

  static LaurentSeries zero(int n_min, int n_max);
  static LaurentSeries monomial(int degree, Complex c = 1.0, int pad = 0);
  // Taylor coefficients of e^{c x} through degree n_max.
  static LaurentSeries exponential(Complex c, int n_max);

  int n_min() const { return n_min_; }
  int n_max() const { return n_min_ + static_cast<int>(coeffs_.size()) - 1; }
  int valid_order() const { return valid_order_; }
  bool empty() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::optional<Grade> grade() const { return grade_; }

  // Zero outside [n_min, n_max].
  Complex operator[](int n) const;

  double max_modulus() const;
  double max_modulus_through(int n_top) const;
  bool has_principal_part() const;

  LaurentSeries with_valid_order(int valid_order) const;
  // Throws DomainError when a coefficient off the grade exceeds 1e-13 of the max modulus.
  LaurentSeries with_grade(int k, int r) const;
  LaurentSeries without_grade() const;
  // Drops coefficients below n_min or above n_max (zero-padding when widening).
  LaurentSeries resized(int n_min, int n_max) const;

  // Multiply the degree-d coefficient by s^d.
  LaurentSeries rescaled(Complex s) const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(Complex s) const;
  LaurentSeries operator-() const { return *this * Complex(-1.0); }

  Complex evaluate(Complex x) const;

  nlohmann::json to_json() const;
  static LaurentSeries from_json(const nlohmann::json& j);

 private:
  int n_min_ = 0;
  std::vector<Complex> coeffs_;
  int valid_order_ = -1;
  std::optional<Grade> grade_;
};

inline LaurentSeries operator*(Complex s, const LaurentSeries& f) { return f * s; }

// (s_k f)(x) = omega^k f(omega x).
LaurentSeries s_action(const CyclicStructure& c, int k, const LaurentSeries& f);
// T_k = (1/r) sum_l s_k^l; keeps degrees n = -k (mod r).
LaurentSeries project_T(const CyclicStructure& c, int k, const LaurentSeries& f);
LaurentSeries differentiate(const LaurentSeries& f);
LaurentSeries mul_x_power(const LaurentSeries& f, int m);

// max |f_n - g_n| over degrees up to min(valid orders).
double max_coeff_diff(const LaurentSeries& f, const LaurentSeries& g);
// max_coeff_diff divided by the larger max modulus over the same window.
double relative_coeff_diff(const LaurentSeries& f, const LaurentSeries& g);

}  // namespace rdunkl
