#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdunkl/dunkl_opdam.hpp"
#include "rdunkl/errors.hpp"
#include "rdunkl/special_functions.hpp"
#include "rdunkl/suites.hpp"
#include "rdunkl/transforms.hpp"

using namespace rdunkl;
using nlohmann::json;

namespace {

struct Globals {
  int r = 2;
  std::string alpha;
  std::optional<double> a;
  std::uint64_t seed = 1;
  int nodes = 48;
  int degree = 60;
  bool json_out = false;
  bool csv_out = false;
  double tolerance_scale = 1.0;
};

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw ParameterError(std::string(what) + " is empty");
  return out;
}

// "lo:hi:count" or a comma list.
std::vector<double> parse_grid(const std::string& s, const char* what) {
  if (s.find(':') == std::string::npos) return parse_list(s, what);
  std::vector<double> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(parse_list(item, what).front());
  if (parts.size() != 3 || parts[2] < 1 || parts[2] != std::floor(parts[2]))
    throw ParameterError(std::string(what) + " grid must be lo:hi:count");
  int n = static_cast<int>(parts[2]);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(n == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * i / (n - 1));
  return out;
}

std::string csv_number(double v) {
  char buf[64];
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    if (v == 0.0) return "0";
    std::snprintf(buf, sizeof buf, "%.0f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%#.15g", v);
  }
  return buf;
}

void print_rows(const std::vector<double>& xs, const std::vector<Complex>& vals, bool as_json, const char* key) {
  if (as_json) {
    json rows = json::array();
    for (size_t i = 0; i < xs.size(); ++i)
      rows.push_back({{key, number_to_json(xs[i])}, {"re", number_to_json(vals[i].real())}, {"im", number_to_json(vals[i].imag())}});
    std::cout << rows.dump(2) << "\n";
    return;
  }
  std::cout << "x,re,im\n";
  for (size_t i = 0; i < xs.size(); ++i)
    std::cout << csv_number(xs[i]) << "," << csv_number(vals[i].real()) << "," << csv_number(vals[i].imag()) << "\n";
}

IndexVector mu_from(const Globals& g) {
  if (g.alpha.empty()) return IndexVector::degenerate(g.r);
  IndexVector mu(parse_list(g.alpha, "--alpha"));
  if (mu.r() != g.r) throw ParameterError("--alpha has " + std::to_string(mu.r()) + " entries but r = " + std::to_string(g.r));
  return mu;
}

int cmd_eval(const Globals& g, const std::string& kind, const std::string& xs_text) {
  std::vector<double> xs = parse_grid(xs_text, "--x");
  std::vector<Complex> vals;
  if (kind == "cosr") {
    for (double x : xs) vals.push_back(cos_r_value(g.r, x));
  } else {
    IndexVector mu = mu_from(g);
    for (double x : xs) vals.push_back(kind == "j" ? j_mu_value(mu, x) : dunkl_kernel_value(mu, x));
  }
  print_rows(xs, vals, g.json_out, "x");
  return 0;
}

SuiteOptions suite_options(const Globals& g) {
  SuiteOptions o;
  o.r = g.r;
  if (!g.alpha.empty()) o.alpha = parse_list(g.alpha, "--alpha");
  o.a = g.a;
  o.seed = g.seed;
  o.nodes = g.nodes;
  o.degree = g.degree;
  o.tolerance_scale = g.tolerance_scale;
  return o;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  auto reports = run_suite(suite, suite_options(g));
  std::cout << reports_to_json(reports).dump(2) << "\n";
  return all_pass(reports) ? 0 : 1;
}

json real_or_complex(Complex z) {
  if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z.real()))) return number_to_json(z.real());
  return json::array({number_to_json(z.real()), number_to_json(z.imag())});
}

int cmd_convert(const Globals& g, bool r_given, const std::string& direction, const std::string& values_text) {
  std::vector<double> v = parse_list(values_text, "--values");
  json out;
  out["direction"] = direction;
  if (direction == "kappa-to-a") {
    int r = static_cast<int>(v.size()) + 1;
    if (r_given && r != g.r) throw ParameterError("kappa-to-a needs r - 1 values");
    KappaVector kappa(r, std::vector<Complex>(v.begin(), v.end()));
    std::vector<Complex> a = kappa_to_a(kappa);
    json arr = json::array();
    for (Complex x : a) arr.push_back(real_or_complex(x));
    out["r"] = r;
    out["solvable"] = true;
    out["a"] = arr;
    out["residual"] = number_to_json(kappa_system_residual(kappa, a));
  } else if (direction == "a-to-kappa") {
    int r = static_cast<int>(v.size());
    if (r < 2) throw ParameterError("a-to-kappa needs at least two values");
    if (r_given && r != g.r) throw ParameterError("a-to-kappa needs r values");
    KappaSolution sol = a_to_kappa(v);
    out["r"] = r;
    out["solvable"] = sol.solvable();
    if (sol.solvable()) {
      json arr = json::array();
      for (Complex x : sol.kappa->kappas) arr.push_back(real_or_complex(x));
      out["kappa"] = arr;
    } else {
      out["kappa"] = nullptr;
    }
    out["residual"] = number_to_json(sol.residual);
  } else {
    throw ParameterError("--direction must be kappa-to-a or a-to-kappa");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_transform(const Globals& g, const std::string& input, const std::string& coeffs_text, const std::string& grid) {
  IndexVector mu = mu_from(g);
  if (mu.alpha(0) != 0.0) throw ParameterError("the transform needs alpha_0 = 0");
  double a = g.a.value_or(mu.a(1));
  std::vector<Complex> coeffs;
  if (input == "gaussian") {
    coeffs = {1.0};
  } else if (input == "poly") {
    for (double c : parse_list(coeffs_text, "--coeffs")) coeffs.push_back(c);
  } else {
    throw ParameterError("--input must be gaussian or poly");
  }
  RayTestFunction f(LaurentSeries(0, coeffs), g.r);
  std::vector<double> lambdas = parse_grid(grid, "--lambda-grid");
  double lmax = 0.0;
  for (double l : lambdas) lmax = std::max(lmax, std::abs(l));
  InnerProductOptions io;
  io.n_nodes = std::max(200, 4 * g.nodes);
  io.growth = lmax;
  WeightedInnerProduct ip = make_inner_product(a, g.r, io);
  ComplexFn fn = f.as_function();
  std::vector<Complex> vals;
  for (double l : lambdas) vals.push_back(dunkl_transform_F(mu, a, fn, l, ip));
  if (!g.json_out) {
    print_rows(lambdas, vals, false, "lambda");
    return 0;
  }
  json out;
  json rows = json::array();
  for (size_t i = 0; i < lambdas.size(); ++i)
    rows.push_back({{"lambda", number_to_json(lambdas[i])}, {"re", number_to_json(vals[i].real())}, {"im", number_to_json(vals[i].imag())}});
  out["values"] = rows;
  std::vector<VerificationReport> reports;
  if (g.r == 2) {
    VStarOptions vo;
    vo.n_nodes = g.nodes;
    reports.push_back(factorization_check(mu, a, f, lambdas.front(), ip, vo, 1e-6 * g.tolerance_scale));
    reports.push_back(eigen_property_check(mu, a, f, lambdas.front(), ip, 1e-6 * g.tolerance_scale));
  }
  out["reports"] = reports_to_json(reports);
  std::cout << out.dump(2) << "\n";
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rdunkl: cyclic Dunkl operators, kernels and transforms"};
  app.require_subcommand(1);
  Globals g;
  auto* r_opt = app.add_option("--r", g.r, "order of the cyclic group")->check(CLI::Range(2, 64));
  app.add_option("--alpha,--mu", g.alpha, "index vector alpha_0,...,alpha_{r-1}");
  app.add_option("--a", g.a, "weight exponent of the inner product");
  app.add_option("--seed", g.seed, "seed for random draws");
  app.add_option("--nodes", g.nodes, "quadrature nodes per dimension");
  app.add_option("--degree", g.degree, "series degree");
  auto* json_flag = app.add_flag("--json", g.json_out, "JSON output");
  auto* csv_flag = app.add_flag("--csv", g.csv_out, "CSV output");
  json_flag->excludes(csv_flag);
  app.add_option("--tolerance-scale", g.tolerance_scale, "multiplies every tolerance");
  app.fallthrough();

  auto* eval = app.add_subcommand("eval", "tabulate j_mu, E_mu or cos_r");
  std::string kind, xs = "0,0.5,1,1.5,2";
  eval->add_option("kind", kind)->required()->check(CLI::IsMember({"j", "E", "cosr"}));
  eval->add_option("--x", xs, "comma list or lo:hi:count");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(choices));

  auto* convert = app.add_subcommand("convert", "Dunkl-Opdam parameter conversion");
  std::string direction, values;
  convert->add_option("--direction", direction)->required()->check(CLI::IsMember({"kappa-to-a", "a-to-kappa"}));
  convert->add_option("--values", values)->required();

  auto* transform = app.add_subcommand("transform", "r-Dunkl transform of a test function");
  std::string input = "gaussian", coeffs = "1", grid = "0:2:5";
  transform->add_option("--input", input)->check(CLI::IsMember({"gaussian", "poly"}));
  transform->add_option("--coeffs", coeffs, "polynomial coefficients for --input poly");
  transform->add_option("--lambda-grid", grid, "comma list or lo:hi:count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) return cmd_eval(g, kind, xs);
    if (*verify) return cmd_verify(g, suite);
    if (*convert) return cmd_convert(g, r_opt->count() > 0, direction, values);
    if (*transform) return cmd_transform(g, input, coeffs, grid);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
