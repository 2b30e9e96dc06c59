#include "rdunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <mutex>
#include <map>
#include <tuple>

#include "rdunkl/errors.hpp"

namespace rdunkl {

namespace {

QuadratureRule build_jacobi(double a, double b, int n) {
  // Three-term recurrence of Jacobi polynomials on [-1,1], weight (1-x)^a (1+x)^b.
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      diag(i) = (b - a) / (a + b + 2.0);
    } else {
      double s = 2.0 * i + a + b;
      diag(i) = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int i = 1; i < n; ++i) {
    double s = 2.0 * i + a + b;
    double v;
    if (i == 1) {
      v = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    } else {
      v = 4.0 * i * (i + a) * (i + b) * (i + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(i - 1) = std::sqrt(v);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw SingularError("Golub-Welsch eigen solve failed");
  // Mass of (1-v)^a v^b on [0,1].
  double mu0 = std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  QuadratureRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<size_t>(i)] = 0.5 * (1.0 + solver.eigenvalues()(i));
    rule.weights[static_cast<size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_jacobi_rule(double p, double q, int n) {
  if (!(p > -1.0) || !(q > -1.0)) throw ParameterError("Gauss-Jacobi exponents must exceed -1");
  if (n < 1) throw ParameterError("quadrature needs at least one node");
  static std::mutex mtx;
  static std::map<std::tuple<double, double, int>, QuadratureRule> cache;
  auto key = std::make_tuple(p, q, n);
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  QuadratureRule rule = build_jacobi(p, q, n);
  rule.kind = "gauss-jacobi";
  std::lock_guard<std::mutex> lock(mtx);
  if (cache.size() > 4096) cache.clear();
  cache.emplace(key, rule);
  return rule;
}

QuadratureRule gauss_legendre_rule(int n, double lo, double hi) {
  QuadratureRule rule = gauss_jacobi_rule(0.0, 0.0, n);
  double h = hi - lo;
  for (size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = lo + h * rule.nodes[i];
    rule.weights[i] *= h;
  }
  rule.kind = "gauss-legendre";
  return rule;
}

QuadratureRule composite_legendre_rule(int panels, int nodes_per_panel, double lo, double hi) {
  QuadratureRule base = gauss_jacobi_rule(0.0, 0.0, nodes_per_panel);
  QuadratureRule rule;
  rule.kind = "composite-gauss-legendre";
  double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    double a = lo + p * h;
    for (size_t i = 0; i < base.size(); ++i) {
      rule.nodes.push_back(a + h * base.nodes[i]);
      rule.weights.push_back(h * base.weights[i]);
    }
  }
  return rule;
}

}  // namespace rdunkl
