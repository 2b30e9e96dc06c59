#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdunkl/report.hpp"

namespace rdunkl {

struct SuiteOptions {
  int r = 2;
  std::optional<std::vector<double>> alpha;  // fixed index vector instead of random draws
  std::optional<double> a;
  std::uint64_t seed = 1;
  int nodes = 48;
  int degree = 60;
  double tolerance_scale = 1.0;  // multiplies every upper bound; negative-control floors are fixed
};

const std::vector<std::string>& suite_names();

std::vector<VerificationReport> eigen_suite(const SuiteOptions& opt);
std::vector<VerificationReport> power_suite(const SuiteOptions& opt);
std::vector<VerificationReport> mehler_suite(const SuiteOptions& opt);
std::vector<VerificationReport> rl_suite(const SuiteOptions& opt);
std::vector<VerificationReport> hilbert_suite(const SuiteOptions& opt);
std::vector<VerificationReport> transmutation_suite(const SuiteOptions& opt);
std::vector<VerificationReport> transform_suite(const SuiteOptions& opt);
std::vector<VerificationReport> dunkl_opdam_suite(const SuiteOptions& opt);

// "all" runs every suite. Reports come back sorted by check_id. ParameterError on an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace rdunkl
