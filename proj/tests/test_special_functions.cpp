#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rdunkl/errors.hpp"
#include "rdunkl/special_functions.hpp"

using namespace rdunkl;

TEST_CASE("index vectors") {
  IndexVector mu({0.5, -0.25, 1.0});
  CHECK(mu.r() == 3);
  CHECK(mu.a(0) == doctest::Approx(1.5));
  CHECK(mu.a(1) == doctest::Approx(0.25));
  CHECK(mu.a(2) == doctest::Approx(5.0));
  CHECK_THROWS_AS(IndexVector({-1.0, 0.5}), ParameterError);
  CHECK_THROWS_AS(IndexVector({0.0}), ParameterError);
  CHECK(IndexVector::degenerate(4).is_degenerate());
  for (double a : IndexVector::degenerate(4).a_values()) CHECK(std::abs(a) < 1e-15);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5).epsilon(1e-15));
  CHECK(pochhammer(2.0, 0) == 1.0);
  CHECK(pochhammer(-2.0, 2) == doctest::Approx(2.0));  // (-2)(-1)
  CHECK_THROWS_AS(pochhammer(-2.0, 3), PoleError);
  double big = pochhammer(1.5, 80);
  CHECK(big == doctest::Approx(std::exp(std::lgamma(81.5) - std::lgamma(1.5))).epsilon(1e-12));
}

TEST_CASE("r = 2 with mu = (0, -1/2) is the cosine") {
  IndexVector mu({0.0, -0.5});
  for (double x : {0.0, 0.3, 1.0, 2.5, 7.0}) CHECK(std::abs(j_mu_value(mu, x) - std::cos(x)) < 1e-14);
}

TEST_CASE("r = 2 Bessel functions against the cylinder functions") {
  for (double alpha : {0.25, 0.5, 1.7}) {
    IndexVector mu({0.0, alpha});
    for (double x : {0.5, 1.0, 4.0}) {
      double ref = std::tgamma(alpha + 1.0) * std::pow(2.0 / x, alpha) * std::cyl_bessel_j(alpha, x);
      CHECK(std::abs(j_mu_value(mu, x) - ref) < 1e-13);
    }
  }
}

TEST_CASE("cos_r") {
  for (int r = 2; r <= 6; ++r) CHECK(cos_r_value(r, 0.0) == Complex(1.0));
  CHECK(std::abs(cos_r_value(2, 1.3) - std::cos(1.3)) < 1e-15);
  // cos_4 x = cos(x / sqrt 2) cosh(x / sqrt 2)
  double h = 1.3 / std::sqrt(2.0);
  CHECK(std::abs(cos_r_value(4, 1.3) - std::cos(h) * std::cosh(h)) < 1e-14);
  LaurentSeries s = cos_r_series(3, 30);
  CHECK(std::abs(s.evaluate(1.1) - cos_r_value(3, 1.1)) < 1e-14);
  // cos_r is the grade-0 part of e^{theta x}
  CyclicStructure c(5);
  Complex avg = 0.0;
  for (int n = 0; n < 5; ++n) avg += std::exp(c.theta * c.omega_pow(n) * 0.8);
  CHECK(std::abs(avg / 5.0 - cos_r_value(5, 0.8)) < 1e-14);
}

TEST_CASE("degenerate kernel is e^{theta x}") {
  for (int r = 2; r <= 5; ++r) {
    CyclicStructure c(r);
    for (double x : {0.0, 1.0, 2.0}) CHECK(std::abs(dunkl_kernel_value(IndexVector::degenerate(r), x) - std::exp(c.theta * x)) < 1e-13);
  }
  Complex e = dunkl_kernel_value(IndexVector::degenerate(2), 1.0);
  CHECK(e.real() == doctest::Approx(0.540302305868140).epsilon(1e-14));
  CHECK(e.imag() == doctest::Approx(0.841470984807897).epsilon(1e-14));
}

TEST_CASE("classical Dunkl kernel for r = 2") {
  // E(x) = j_alpha(x) + i x / (2 alpha + 2) j_{alpha+1}(x)
  double alpha = 0.6;
  IndexVector mu({0.0, alpha}), mu1({0.0, alpha + 1.0});
  for (double x : {0.4, 1.5, 3.0}) {
    Complex ref = j_mu_value(mu, x) + Complex(0.0, x / (2.0 * alpha + 2.0)) * j_mu_value(mu1, x);
    CHECK(std::abs(dunkl_kernel_value(mu, x) - ref) < 1e-14);
  }
}

TEST_CASE("kernel domain errors") {
  CHECK_THROWS_AS(dunkl_kernel_value(IndexVector({0.0, 0.5}), 40.0), SeriesOverflowError);
  CHECK_NOTHROW(dunkl_kernel_value(IndexVector({0.0, 0.5}), 40.0, 64.0));
  CHECK_THROWS_AS(dunkl_kernel_value(IndexVector({0.5, 0.5}), 0.0), DomainError);
}

TEST_CASE("beta lemma") {
  for (int r = 2; r <= 4; ++r)
    for (double x : {0.3, 1.0, 2.7})
      for (double y : {0.25, 1.0, 2.2}) {
        double ref = std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
        CHECK(std::abs(beta_lemma_quadrature(x, y, r) - ref) / ref < 1e-12);
      }
  CHECK_THROWS_AS(beta_lemma_quadrature(-1.0, 1.0, 2), ParameterError);
}
