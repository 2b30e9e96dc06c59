#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rdunkl/hilbert.hpp"

using namespace rdunkl;

TEST_CASE("test family evaluates on rays") {
  RayTestFunction f(LaurentSeries(0, {1.0, 2.0}, 1), 3);
  CyclicStructure c(3);
  Complex z = 0.7 * c.omega;
  CHECK(std::abs(f(z) - (1.0 + 2.0 * z) * std::exp(-0.343)) < 1e-15);
  // (p e^{-x^r})' = (p' - r x^{r-1} p) e^{-x^r}
  Complex d = f.derivative()(z);
  CHECK(std::abs(d - (2.0 - 3.0 * z * z * (1.0 + 2.0 * z)) * std::exp(-0.343)) < 1e-14);
}

TEST_CASE("inner product basics") {
  std::mt19937_64 rng(1);
  WeightedInnerProduct ip = make_inner_product(1.5, 3);
  CHECK(ip.Tmax > 1.0);
  for (int i = 0; i < 4; ++i) {
    RayTestFunction f = RayTestFunction::random(3, 4, rng), g = RayTestFunction::random(3, 4, rng);
    Complex ff = inner_product(f, f, ip);
    CHECK(ff.real() > 0.0);
    CHECK(std::abs(ff.imag()) < 1e-14 * ff.real());
    CHECK(std::abs(inner_product(f, g, ip) - std::conj(inner_product(g, f, ip))) < 1e-14);
  }
  // <e^{-t^2}, e^{-t^2}>_0 on both rays of r = 2 = 2 int_0^inf e^{-2t^2} dt
  WeightedInnerProduct ip0 = make_inner_product(0.0, 2);
  RayTestFunction gauss(LaurentSeries::monomial(0, 1.0), 2);
  CHECK(std::abs(inner_product(gauss, gauss, ip0) - std::sqrt(std::numbers::pi / 2.0)) < 1e-13);
  CHECK(std::abs(inner_product(gauss, gauss, ip0, Exec::Serial) - inner_product(gauss, gauss, ip0, Exec::Parallel)) == 0.0);
}

TEST_CASE("projector and multiplication identities") {
  std::mt19937_64 rng(2);
  for (int r = 2; r <= 4; ++r) {
    WeightedInnerProduct ip = make_inner_product(1.0 + 0.5 * r, r);
    TestPairs pairs = random_test_pairs(r, 4, 4, rng);
    for (int i = 0; i < r; ++i) {
      CHECK(projector_symmetry_check(i, ip, pairs).pass);
      for (int j = 0; j < r; ++j)
        if (j != i) CHECK(projector_orthogonality_check(i, j, ip, pairs).pass);
    }
    CHECK(multiplication_adjoint_check(ip, pairs).pass);
  }
}

TEST_CASE("integration by parts carries the ray phase") {
  std::mt19937_64 rng(3);
  WeightedInnerProduct ip = make_inner_product(2.0, 3);
  RayTestFunction f = RayTestFunction::random(3, 4, rng), g = RayTestFunction::random(3, 4, rng);
  VerificationReport rep = integration_by_parts_check(f, g, ip, 1e-7);
  CHECK(rep.pass);
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(std::abs(ray_phase(2.0 * CyclicStructure(3).omega) - CyclicStructure(3).omega_pow(2)) < 1e-15);
}

TEST_CASE("D* is the adjoint of D") {
  std::mt19937_64 rng(4);
  for (int r = 2; r <= 4; ++r) {
    std::vector<double> a(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) a[static_cast<size_t>(k)] = 0.2 + 0.3 * k;
    IndexVector mu(a);
    WeightedInnerProduct ip = make_inner_product(1.7, r);
    CHECK(d_star_adjointness_check(mu, ip, random_test_pairs(r, 4, 4, rng), 1e-7).pass);
  }
}

TEST_CASE("r = 2 antisymmetry with a = 2 alpha + 1") {
  std::mt19937_64 rng(5);
  for (double alpha : {0.0, 0.5, 1.3}) {
    IndexVector mu({0.0, alpha});
    WeightedInnerProduct ip = make_inner_product(2.0 * alpha + 1.0, 2);
    TestPairs pairs = random_test_pairs(2, 4, 4, rng);
    CHECK(antisymmetry_check(mu, ip, pairs, 1e-8).pass);
    CHECK(d_star_equals_minus_d_report(mu, 2.0 * alpha + 1.0, pairs).residual < 1e-12);
  }
  // Off the special weight the antisymmetry breaks.
  IndexVector mu({0.0, 0.5});
  WeightedInnerProduct ip = make_inner_product(3.0, 2);
  CHECK_FALSE(antisymmetry_check(mu, ip, random_test_pairs(2, 4, 4, rng), 1e-8).pass);
}

TEST_CASE("D* = -D for r = 3 is measured only") {
  std::mt19937_64 rng(6);
  double v = 0.9;
  VerificationReport rep =
      d_star_equals_minus_d_report(IndexVector({0.0, v - 1.0 / 3.0, -2.0 / 3.0}), 3.0 * v, random_test_pairs(3, 4, 4, rng));
  CHECK(rep.kind == CheckKind::Report);
  CHECK(rep.pass);
  CHECK(rep.residual > 1e-3);
}
