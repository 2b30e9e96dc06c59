#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rdunkl/errors.hpp"
#include "rdunkl/mehler.hpp"

using namespace rdunkl;

TEST_CASE("single-dimension weight for r = 2") {
  double alpha = 0.75;
  IndexVector mu({0.0, alpha});
  MehlerWeight w = build_mehler_weight(mu, 48);
  REQUIRE(w.included_dims.size() == 1);
  double c = 2.0 * std::tgamma(alpha + 1.0) / (std::tgamma(alpha + 0.5) * std::sqrt(std::numbers::pi));
  CHECK(w.c_mu == doctest::Approx(c).epsilon(1e-14));
  CHECK(std::abs(mehler_j(w, 1.0) - j_mu_value(mu, 1.0)) < 1e-10);
}

TEST_CASE("single-dimension integral for the r = 2 kernel") {
  // E(x) = Gamma(alpha+1) / (sqrt(pi) Gamma(alpha+1/2)) int_{-1}^{1} e^{ixu} (1+u) (1-u^2)^{alpha-1/2} du
  double alpha = 0.6, x = 1.5;
  QuadratureRule rule = gauss_jacobi_rule(alpha - 0.5, alpha + 0.5, 48);
  Complex s = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::exp(Complex(0.0, x * (2.0 * rule.nodes[i] - 1.0)));
  s *= std::pow(2.0, 2.0 * alpha + 1.0) * std::tgamma(alpha + 1.0) / (std::sqrt(std::numbers::pi) * std::tgamma(alpha + 0.5));
  MehlerWeight w = build_mehler_weight(IndexVector({0.0, alpha}), 48);
  CHECK(std::abs(mehler_E(w, x) - s) < 1e-12);
  CHECK(std::abs(dunkl_kernel_value(IndexVector({0.0, alpha}), x) - s) < 1e-12);
}

TEST_CASE("r = 3 single dimension") {
  double v = 0.9;
  IndexVector mu({0.0, v - 1.0 / 3.0, -2.0 / 3.0});
  MehlerWeight w = build_mehler_weight(mu, 48);
  REQUIRE(w.included_dims.size() == 1);
  double c = 3.0 * std::tgamma(v + 2.0 / 3.0) / (std::tgamma(v) * std::tgamma(2.0 / 3.0));
  CHECK(w.c_mu == doctest::Approx(c).epsilon(1e-14));
  CHECK(std::abs(mehler_j(w, 2.0) - j_mu_value(mu, 2.0)) / std::abs(j_mu_value(mu, 2.0)) < 1e-9);
  CHECK(std::abs(mehler_E(w, 1.0) - dunkl_kernel_value(mu, 1.0)) / std::abs(dunkl_kernel_value(mu, 1.0)) < 1e-8);
}

TEST_CASE("random index vectors against the series") {
  std::mt19937_64 rng(12);
  for (int r : {2, 3}) {
    for (int i = 0; i < 3; ++i) {
      std::vector<double> a(static_cast<size_t>(r));
      for (int k = 0; k < r; ++k) a[static_cast<size_t>(k)] = std::uniform_real_distribution<double>(-double(k) / r + 0.05, 3.0)(rng);
      IndexVector mu(a);
      MehlerWeight w = build_mehler_weight(mu, 48);
      a[0] = 0.0;
      IndexVector mu0(a);
      MehlerWeight w0 = build_mehler_weight(mu0, 48);
      for (double x : {0.5, 1.0, 2.0, 5.0}) {
        CHECK(std::abs(mehler_j(w, x) - j_mu_value(mu, x)) / std::abs(j_mu_value(mu, x)) < 1e-9);
        CHECK(std::abs(mehler_E(w0, x) - dunkl_kernel_value(mu0, x)) / std::abs(dunkl_kernel_value(mu0, x)) < 1e-8);
      }
    }
  }
}

TEST_CASE("degenerate index gives cos_r and e^{theta x}") {
  MehlerWeight w = build_mehler_weight(IndexVector::degenerate(3), 16);
  CHECK(w.included_dims.empty());
  CHECK(std::abs(mehler_j(w, 1.2) - cos_r_value(3, 1.2)) < 1e-14);
  CHECK(std::abs(mehler_E(w, 1.2) - std::exp(CyclicStructure(3).theta * 1.2)) < 1e-14);
}

TEST_CASE("serial and parallel are identical") {
  MehlerWeight w = build_mehler_weight(IndexVector({0.4, 0.3, 1.2}), 32);
  Complex s = mehler_j(w, 1.7, Exec::Serial), p = mehler_j(w, 1.7, Exec::Parallel);
  CHECK(s.real() == p.real());
  CHECK(s.imag() == p.imag());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(build_mehler_weight(IndexVector({0.0, -0.6}), 16), ParameterError);
  MehlerWeight w = build_mehler_weight(IndexVector({0.0, 0.5}), 16);
  CHECK_THROWS_AS(mehler_E(w, 0.0), DomainError);
}
