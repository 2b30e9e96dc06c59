#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "rdunkl/errors.hpp"
#include "rdunkl/operators.hpp"
#include "rdunkl/transmutation.hpp"

using namespace rdunkl;

namespace {

IndexVector one_dim_r3(double v) { return IndexVector({0.0, v - 1.0 / 3.0, -2.0 / 3.0}); }

LaurentSeries poly(int n, int N) { return LaurentSeries::monomial(n, 1.0).resized(0, N).with_valid_order(N); }

LaurentSeries random_poly(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<Complex> c(static_cast<size_t>(n + 1));
  for (auto& x : c) x = Complex(d(rng), d(rng));
  return LaurentSeries(0, std::move(c), n);
}

}  // namespace

TEST_CASE("r = 2 closed form c [T0 R + T1 x^{-1} R x]") {
  double alpha = 0.75, beta = alpha + 0.5;
  double c = 2.0 * std::tgamma(alpha + 1.0) / (std::tgamma(beta) * std::sqrt(std::numbers::pi));
  TransmutationOperator V(IndexVector({0.0, alpha}), 60);
  CHECK(V.c_mu() == doctest::Approx(c).epsilon(1e-14));
  for (int n = 0; n <= 60; ++n) {
    double d = c * rl_coefficient(beta, n % 2 == 0 ? n : n + 1, 2);
    CHECK(std::abs(V.entry(n, 0) - d) < 1e-13 * d);
    if (n > 0) CHECK(std::abs(V.entry(n, 1)) < 1e-13 * d);
  }
}

TEST_CASE("r = 3 closed form with the (3v / theta) correction") {
  double v = 0.9;
  double c = 3.0 * std::tgamma(v + 2.0 / 3.0) / (std::tgamma(v) * std::tgamma(2.0 / 3.0));
  TransmutationOperator V(one_dim_r3(v), 60);
  CyclicStructure cs(3);
  for (int n = 0; n <= 60; ++n) {
    int shift = n % 3 == 0 ? 1 : (n % 3 == 1 ? 3 : 2);
    double d = c * rl_coefficient(v, n + shift, 3);
    CHECK(std::abs(V.entry(n, 0) - d) < 1e-13 * d);
    Complex sub = n % 3 == 2 ? 3.0 * v / cs.theta * d : Complex(0.0);
    if (n > 0) CHECK(std::abs(V.entry(n, 1) - sub) < 1e-13 * d);
    if (n > 1) CHECK(std::abs(V.entry(n, 2)) < 1e-13 * d);
  }
}

TEST_CASE("band structure and normalization") {
  std::mt19937_64 rng(1);
  IndexVector mu({0.0, 0.4, 0.8, 1.5});
  TransmutationOperator V(mu, 40);
  for (int n = 0; n <= 40; ++n) {
    LaurentSeries out = V.apply(poly(n, 40));
    for (int d = 0; d <= 40; ++d)
      if (d > n || d < n - 3) CHECK(std::abs(out[d]) == 0.0);
    CHECK(std::abs(V.entry(n, 0)) > 0.0);
  }
  CHECK(std::abs(V.apply(poly(0, 40))[0] - 1.0) < 1e-14);
  CHECK_THROWS_AS(V.apply(LaurentSeries(-1, {1.0, 1.0}, 0)), DomainError);
}

TEST_CASE("inverse round trips") {
  std::mt19937_64 rng(2);
  for (const IndexVector& mu : {IndexVector({0.0, 0.6}), one_dim_r3(0.9), IndexVector({0.0, 0.3, 1.1, 0.2})}) {
    TransmutationOperator V(mu, 60);
    LaurentSeries f = random_poly(60, rng);
    CHECK(relative_coeff_diff(V.inverse(V.apply(f)), f) < 1e-10);
    CHECK(relative_coeff_diff(V.apply(apply_V_inverse(V, f)), f) < 1e-10);
  }
}

TEST_CASE("r = 3 closed-form inverse") {
  double v = 0.9;
  TransmutationOperator V(one_dim_r3(v), 60);
  CyclicStructure cs(3);
  for (int n = 2; n <= 60; n += 3) {
    LaurentSeries g = V.inverse(poly(n, 60));
    Complex d = V.entry(n, 0);
    CHECK(std::abs(g[n] - 1.0 / d) < 1e-12 * std::abs(1.0 / d));
    CHECK(std::abs(g[n - 1] + 3.0 * v / cs.theta / d) < 1e-12 * std::abs(1.0 / d));
  }
}

TEST_CASE("V maps the exponential to the kernel") {
  CHECK(v_maps_exp_to_kernel_check(IndexVector({0.0, 0.6}), 1.0, 60).pass);
  CHECK(v_maps_exp_to_kernel_check(IndexVector({0.0, 0.6}), Complex(0.5, 0.2), 60).pass);
  CHECK(v_maps_exp_to_kernel_check(one_dim_r3(0.9), 1.0, 60).pass);
  CHECK(v_maps_exp_to_kernel_check(IndexVector::degenerate(3), Complex(0.5, 0.2), 60).pass);
}

TEST_CASE("monomial transmutation") {
  for (int n = 0; n <= 40; ++n) {
    TransmutationOperator V(IndexVector({0.0, 0.6}), 60);
    CHECK(transmutation_residual_value(V, poly(n, 60)) < 1e-12);
  }
  // r = 3: bounded away from zero at every truncation.
  for (int N : {40, 60, 80}) {
    TransmutationOperator V(one_dim_r3(0.9), N);
    CHECK(transmutation_residual_value(V, poly(3, N)) > 1e-2);
  }
  VerificationReport rep =
      transmutation_residual(one_dim_r3(0.9), poly(3, 60), 60, "transmutation.monomial", CheckKind::NegativeControl, 1e-2);
  CHECK(rep.pass);
  CHECK(rep.kind == CheckKind::NegativeControl);
}

TEST_CASE("normal-convergence value") {
  CyclicStructure c2(2), c3(3);
  CHECK(fourier_condition_value({{0, 1.0}}, c3) == doctest::Approx(1.0));
  CHECK(fourier_condition_value({{-2, 0.5}, {3, Complex(0.0, 2.0)}}, c2) == doctest::Approx(2.5));
  CHECK(fourier_condition_value({{1, 1.0}}, c3) == doctest::Approx(std::exp(std::numbers::pi * std::sqrt(3.0) / 2.0)).epsilon(1e-13));
  LaurentSeries s = fourier_sum_series({{1, 1.0}, {-1, 1.0}}, 2.0 * std::numbers::pi, 40);
  CHECK(std::abs(s.evaluate(0.7) - 2.0 * std::cos(0.7)) < 1e-14);
}

TEST_CASE("finite Fourier sums for r = 2") {
  std::map<int, Complex> c;
  for (int n = -8; n <= 8; ++n) c[n] = 1.0 / (1.0 + n * n);
  TransmutationOperator V(IndexVector({0.0, 0.6}), 80);
  CHECK(transmutation_residual_value(V, fourier_sum_series(c, 20.0, 80)) < 1e-9);
}

TEST_CASE("degenerate V is the identity") {
  std::mt19937_64 rng(3);
  TransmutationOperator V(IndexVector::degenerate(3), 30);
  LaurentSeries f = random_poly(30, rng);
  CHECK(max_coeff_diff(V.apply(f), f) < 1e-15);
}
