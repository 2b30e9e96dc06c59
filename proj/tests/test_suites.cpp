#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rdunkl/errors.hpp"
#include "rdunkl/suites.hpp"

using namespace rdunkl;

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(names.size() == 8);
  CHECK(names.front() == "eigen");
  CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), ParameterError);
}

TEST_CASE("option validation") {
  SuiteOptions o;
  o.r = 1;
  CHECK_THROWS_AS(run_suite("power", o), ParameterError);
  o = {};
  o.alpha = std::vector<double>{0.0, 0.5, 0.5};
  CHECK_THROWS_AS(run_suite("power", o), ParameterError);
  o = {};
  o.nodes = 1;
  CHECK_THROWS_AS(run_suite("power", o), ParameterError);
  o = {};
  o.degree = 3;
  CHECK_THROWS_AS(run_suite("power", o), ParameterError);
  o = {};
  o.tolerance_scale = 0.0;
  CHECK_THROWS_AS(run_suite("power", o), ParameterError);
}

TEST_CASE("cheap suites pass and are deterministic") {
  for (const char* name : {"eigen", "power", "dunkl-opdam"}) {
    for (int r : {2, 3}) {
      SuiteOptions o;
      o.r = r;
      o.seed = 7;
      auto a = run_suite(name, o);
      auto b = run_suite(name, o);
      CHECK(all_pass(a));
      CHECK(reports_to_json(a).dump() == reports_to_json(b).dump());
      o.seed = 8;
      CHECK(all_pass(run_suite(name, o)));
    }
  }
}

TEST_CASE("reports are sorted by id") {
  SuiteOptions o;
  auto v = run_suite("power", o);
  for (size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1].check_id <= v[i].check_id);
}
