#pragma once

#include <random>
#include <utility>
#include <vector>

#include "rdunkl/mehler.hpp"
#include "rdunkl/report.hpp"
#include "rdunkl/riemann_liouville.hpp"
#include "rdunkl/series.hpp"
#include "rdunkl/special_functions.hpp"

namespace rdunkl {

// p(x) e^{-sigma x^r} with p a finite Laurent polynomial. (omega^m t)^r = t^r, so it decays on every ray.
class RayTestFunction {
 public:
  RayTestFunction(LaurentSeries poly, int r, double decay = 1.0);
  // Complex coefficients with real and imaginary parts uniform in [-1, 1], degrees 0..max_degree.
  static RayTestFunction random(int r, int max_degree, std::mt19937_64& rng, double decay = 1.0);

  Complex operator()(Complex z) const;
  ComplexFn as_function() const;

  const LaurentSeries& poly() const { return poly_; }
  int r() const { return r_; }
  double decay() const { return decay_; }

  RayTestFunction derivative() const;
  RayTestFunction project(int k) const;
  RayTestFunction mul_x_power(int m) const;
  RayTestFunction operator+(const RayTestFunction& o) const;
  RayTestFunction operator*(Complex s) const;

 private:
  LaurentSeries poly_;
  int r_;
  double decay_;
};

// D f = f' + (1/x) sum_k a_k T_k f, exact on the polynomial factor.
RayTestFunction apply_D(const IndexVector& mu, const RayTestFunction& f);

struct InnerProductOptions {
  int n_nodes = 200;
  double decay = 1.0;   // slowest decay e^{-decay t^r} among the integrands
  double growth = 0.0;  // fastest kernel growth e^{growth t}
  double grading = 4.0;
  double Tmax = 0.0;    // 0 selects the smallest T with decay T^r - growth T >= 40
};

// <f, g>_a = int_0^inf sum_m f(omega^m t) conj(g(omega^m t)) t^a dt on (0, Tmax],
// Gauss-Legendre in s with t = Tmax s^grading and t^a folded into the weights.
struct WeightedInnerProduct {
  double a = 0.0;
  int r = 2;
  double Tmax = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

WeightedInnerProduct make_inner_product(double a, int r, const InnerProductOptions& opt = {});

Complex inner_product(const ComplexFn& f, const ComplexFn& g, const WeightedInnerProduct& ip, Exec exec = Exec::Parallel);
Complex inner_product(const RayTestFunction& f, const RayTestFunction& g, const WeightedInnerProduct& ip,
                      Exec exec = Exec::Parallel);

// z / conj(z), the ray phase omega^{2m} on z = omega^m t.
Complex ray_phase(Complex z);

// D* g = -[(x/conj x) g' + (1/conj x) sum_k (a - a_k) T_{k+1} g]; on the real axis this is
// -[g' + (1/x) sum_k (a - a_k) T_{k+1} g].
ComplexFn apply_D_star(const IndexVector& mu, double a, const RayTestFunction& g);

using TestPairs = std::vector<std::pair<RayTestFunction, RayTestFunction>>;
TestPairs random_test_pairs(int r, int count, int max_degree, std::mt19937_64& rng);

VerificationReport projector_symmetry_check(int i, const WeightedInnerProduct& ip, const TestPairs& pairs,
                                            double tolerance = 1e-9);
VerificationReport projector_orthogonality_check(int i, int j, const WeightedInnerProduct& ip, const TestPairs& pairs,
                                                 double tolerance = 1e-9);
// <f', g> + <f, (x/conj x) g' + (a/conj x) g>; notes carry the residual with g' in place of (x/conj x) g'.
VerificationReport integration_by_parts_check(const RayTestFunction& f, const RayTestFunction& g,
                                              const WeightedInnerProduct& ip, double tolerance = 1e-8);
VerificationReport multiplication_adjoint_check(const WeightedInnerProduct& ip, const TestPairs& pairs,
                                                double tolerance = 1e-9);
VerificationReport d_star_adjointness_check(const IndexVector& mu, const WeightedInnerProduct& ip, const TestPairs& pairs,
                                            double tolerance = 1e-8);
// <D f, g> + <f, D g>.
VerificationReport antisymmetry_check(const IndexVector& mu, const WeightedInnerProduct& ip, const TestPairs& pairs,
                                      double tolerance = 1e-8);
// max |D* g + D g| / max |D g| over ray samples; reported only.
VerificationReport d_star_equals_minus_d_report(const IndexVector& mu, double a, const TestPairs& pairs);

}  // namespace rdunkl
