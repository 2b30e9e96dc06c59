#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rdunkl/dunkl_opdam.hpp"
#include "rdunkl/errors.hpp"
#include "rdunkl/operators.hpp"

using namespace rdunkl;

TEST_CASE("hand-solved conversions") {
  KappaSolution s = a_to_kappa({0.0, 3.0});
  REQUIRE(s.solvable());
  CHECK(std::abs(s.kappa->kappa(1) - 1.5) < 1e-15);
  KappaSolution bad = a_to_kappa({1.0, 0.0});
  CHECK_FALSE(bad.solvable());
  CHECK(bad.residual == doctest::Approx(0.5));
}

TEST_CASE("round trip and operator equality") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1.0, 2.0);
  for (int r = 2; r <= 6; ++r) {
    std::vector<Complex> k(static_cast<size_t>(r - 1));
    for (auto& x : k) x = d(rng);
    KappaVector kappa(r, k);
    std::vector<Complex> a = kappa_to_a(kappa);
    CHECK(std::abs(a[0]) < 1e-14);
    CHECK(kappa_system_residual(kappa, a) < 1e-14);
    std::vector<double> ar;
    for (Complex x : a) ar.push_back(x.real());
    KappaSolution back = a_to_kappa(ar);
    REQUIRE(back.solvable());
    for (int t = 1; t < r; ++t) CHECK(std::abs(back.kappa->kappa(t) - kappa.kappa(t)) < 1e-13);

    std::vector<Complex> c(61);
    for (auto& x : c) x = Complex(d(rng), d(rng));
    LaurentSeries f(0, c, 60);
    CHECK(relative_coeff_diff(apply_T_kappa(kappa, f), apply_D(index_vector_from_a(a), f)) < 1e-12);
  }
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(KappaVector(3, {1.0}), ParameterError);
  CHECK_THROWS_AS(index_vector_from_a({0.0, Complex(1.0, 0.1)}), ParameterError);
  KappaSolution s = a_to_kappa({0.9, 1.0, 2.0});
  CHECK_FALSE(s.solvable());
  CHECK(s.residual == doctest::Approx(0.3));
}
