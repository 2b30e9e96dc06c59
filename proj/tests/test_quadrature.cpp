#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rdunkl/quadrature.hpp"

using namespace rdunkl;

namespace {

double beta_fn(double x, double y) { return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y)); }

}  // namespace

TEST_CASE("Gauss-Jacobi moments are exact through degree 2n - 1") {
  for (double p : {-0.5, 0.0, 0.7, 2.3})
    for (double q : {-2.0 / 3.0, 0.0, 0.4})
      for (int n : {1, 4, 16, 48}) {
        QuadratureRule rule = gauss_jacobi_rule(p, q, n);
        REQUIRE(rule.size() == static_cast<size_t>(n));
        for (int m = 0; m < 2 * n && m <= 40; ++m) {
          double s = 0.0;
          for (size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], m);
          double ref = beta_fn(q + m + 1.0, p + 1.0);
          CHECK(std::abs(s - ref) < 1e-13 * ref + 1e-15);
        }
      }
}

TEST_CASE("Gauss-Jacobi nodes lie inside and ascend") {
  QuadratureRule rule = gauss_jacobi_rule(-0.9, 1.5, 48);
  for (size_t i = 0; i < rule.size(); ++i) {
    CHECK(rule.nodes[i] > 0.0);
    CHECK(rule.nodes[i] < 1.0);
    CHECK(rule.weights[i] > 0.0);
    if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  }
}

TEST_CASE("Gauss-Legendre and composite rules") {
  QuadratureRule g = gauss_legendre_rule(10, -1.0, 2.0);
  double s = 0.0;
  for (size_t i = 0; i < g.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 19);
  CHECK(s == doctest::Approx((std::pow(2.0, 20) - 1.0) / 20.0).epsilon(1e-13));
  QuadratureRule c = composite_legendre_rule(8, 12, 0.0, 3.0);
  double e = 0.0;
  for (size_t i = 0; i < c.size(); ++i) e += c.weights[i] * std::exp(-c.nodes[i]);
  CHECK(e == doctest::Approx(1.0 - std::exp(-3.0)).epsilon(1e-15));
}
