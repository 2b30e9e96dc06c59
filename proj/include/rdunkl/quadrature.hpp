#pragma once

#include <string>
#include <vector>

namespace rdunkl {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::string kind;

  size_t size() const { return nodes.size(); }
};

// Gauss-Jacobi on [0,1] for the weight (1-v)^p v^q, p, q > -1 (Golub-Welsch).
QuadratureRule gauss_jacobi_rule(double p, double q, int n);
// Gauss-Legendre on [lo, hi].
QuadratureRule gauss_legendre_rule(int n, double lo = 0.0, double hi = 1.0);
// Panels of Gauss-Legendre on [lo, hi].
QuadratureRule composite_legendre_rule(int panels, int nodes_per_panel, double lo, double hi);

}  // namespace rdunkl
