#include "rdunkl/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rdunkl/errors.hpp"

namespace rdunkl {

VerificationReport VerificationReport::bound(std::string id, nlohmann::json params, double residual,
                                             double tolerance, std::vector<std::string> notes) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = std::isfinite(residual) && residual <= tolerance;
  r.notes = std::move(notes);
  r.kind = CheckKind::Bound;
  return r;
}

VerificationReport VerificationReport::negative_control(std::string id, nlohmann::json params, double residual,
                                                        double floor, std::vector<std::string> notes) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = floor;
  r.pass = std::isfinite(residual) && residual > floor;
  r.notes = std::move(notes);
  r.kind = CheckKind::NegativeControl;
  return r;
}

VerificationReport VerificationReport::info(std::string id, nlohmann::json params, double residual,
                                            std::vector<std::string> notes) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = std::numeric_limits<double>::infinity();
  r.pass = true;
  r.notes = std::move(notes);
  r.kind = CheckKind::Report;
  return r;
}

const char* to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Bound: return "bound";
    case CheckKind::NegativeControl: return "must-exceed-floor";
    case CheckKind::Report: return "report";
  }
  return "bound";
}

namespace {

CheckKind kind_from_string(const std::string& s) {
  if (s == "bound") return CheckKind::Bound;
  if (s == "must-exceed-floor") return CheckKind::NegativeControl;
  if (s == "report") return CheckKind::Report;
  throw ParameterError("unknown check kind '" + s + "'");
}

}  // namespace

nlohmann::json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ParameterError("not a number: " + s);
  }
  return j.get<double>();
}

nlohmann::json VerificationReport::to_json() const {
  return {{"check_id", check_id},
          {"params", params},
          {"residual", number_to_json(residual)},
          {"tolerance", number_to_json(tolerance)},
          {"pass", pass},
          {"kind", to_string(kind)},
          {"notes", notes}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.params = j.at("params");
  r.residual = number_from_json(j.at("residual"));
  r.tolerance = number_from_json(j.at("tolerance"));
  r.pass = j.at("pass").get<bool>();
  r.kind = kind_from_string(j.value("kind", std::string("bound")));
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
  auto same = [](double x, double y) { return (std::isnan(x) && std::isnan(y)) || x == y; };
  return a.check_id == b.check_id && a.params == b.params && same(a.residual, b.residual) &&
         same(a.tolerance, b.tolerance) && a.pass == b.pass && a.notes == b.notes && a.kind == b.kind;
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
}

nlohmann::json reports_to_json(std::vector<VerificationReport> reports) {
  sort_reports(reports);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace rdunkl
