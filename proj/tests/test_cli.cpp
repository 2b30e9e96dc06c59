#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(RDUNKL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("eval tabulates as CSV") {
  Run r = run("eval j --x 0,1");
  CHECK(r.code == 0);
  CHECK(r.out == "x,re,im\n0,1,0\n1,0.540302305868140,0\n");
  Run e = run("eval E --x 1");
  CHECK(e.out == "x,re,im\n1,0.540302305868140,0.841470984807897\n");
  Run g = run("eval cosr --r 2 --x 0:1:3");
  CHECK(g.out.rfind("x,re,im\n0,1,0\n0.500000000000000,", 0) == 0);
}

TEST_CASE("eval JSON") {
  Run r = run("--json eval j --r 2 --alpha 0,0.5 --x 0.5");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 1);
  CHECK(j[0]["x"] == 0.5);
}

TEST_CASE("convert") {
  Run r = run("convert --direction a-to-kappa --values 0,3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["solvable"] == true);
  CHECK(j["kappa"][0].get<double>() == doctest::Approx(1.5));
  Run bad = run("convert --direction a-to-kappa --values 1,0");
  REQUIRE(bad.code == 0);
  auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb["solvable"] == false);
  CHECK(jb["kappa"].is_null());
  CHECK(jb["residual"].get<double>() == doctest::Approx(0.5));
  Run k = run("convert --direction kappa-to-a --values 1.5");
  auto jk = nlohmann::json::parse(k.out);
  CHECK(jk["a"][0].get<double>() == doctest::Approx(0.0));
  CHECK(jk["a"][1].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("verify exits 0 and is reproducible") {
  Run a = run("verify eigen --r 3 --seed 7");
  Run b = run("verify eigen --r 3 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j.size() > 0);
}

TEST_CASE("r = 3 monomial negative control") {
  Run a = run("verify transmutation --r 3");
  CHECK(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  bool seen = false;
  for (const auto& rep : j)
    if (rep["check_id"] == "transmutation.monomial") {
      seen = true;
      CHECK(rep["kind"] == "must-exceed-floor");
      CHECK(rep["pass"] == true);
    }
  CHECK(seen);
}

TEST_CASE("transform CSV") {
  Run a = run("transform --alpha 0,0.5 --lambda-grid 0,1");
  CHECK(a.code == 0);
  CHECK(a.out.rfind("x,re,im\n0,", 0) == 0);
}

TEST_CASE("bad parameters exit 2") {
  CHECK(run("eval j --r 3 --alpha 0,1").code == 2);
  CHECK(run("eval j --x abc").code == 2);
  CHECK(run("verify nope").code == 2);
  CHECK(run("--json --csv eval j").code == 2);
  CHECK(run("verify power --r 1").code == 2);
  CHECK(run("verify power --nodes 1").code == 2);
  CHECK(run("transform --alpha 0.2,0.5").code == 2);
  CHECK(run("").code == 2);
}
