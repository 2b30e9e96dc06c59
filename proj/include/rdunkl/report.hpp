#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace rdunkl {

enum class CheckKind {
  Bound,            // pass iff residual <= tolerance
  NegativeControl,  // pass iff residual > tolerance (the floor)
  Report            // measured only; tolerance is +inf
};

struct VerificationReport {
  std::string check_id;
  nlohmann::json params = nlohmann::json::object();
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> notes;
  CheckKind kind = CheckKind::Bound;

  static VerificationReport bound(std::string id, nlohmann::json params, double residual, double tolerance,
                                  std::vector<std::string> notes = {});
  static VerificationReport negative_control(std::string id, nlohmann::json params, double residual,
                                             double floor, std::vector<std::string> notes = {});
  static VerificationReport info(std::string id, nlohmann::json params, double residual, std::vector<std::string> notes = {});

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
};

bool operator==(const VerificationReport& a, const VerificationReport& b);

const char* to_string(CheckKind kind);

void sort_reports(std::vector<VerificationReport>& reports);
nlohmann::json reports_to_json(std::vector<VerificationReport> reports);
bool all_pass(const std::vector<VerificationReport>& reports);

// Non-finite values travel as the strings "inf", "-inf", "nan".
nlohmann::json number_to_json(double x);
double number_from_json(const nlohmann::json& j);

}  // namespace rdunkl
