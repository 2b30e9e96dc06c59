#pragma once

#include <vector>

#include "rdunkl/hilbert.hpp"
#include "rdunkl/report.hpp"
#include "rdunkl/riemann_liouville.hpp"
#include "rdunkl/series.hpp"
#include "rdunkl/special_functions.hpp"
#include "rdunkl/transmutation.hpp"

namespace rdunkl {

struct LaplaceResult {
  Complex value;
  // |g(Tmax) e^{theta lambda Tmax}| as a proxy for the neglected tail.
  double tail_bound = 0.0;
  bool tail_warning = false;
};

// int_0^Tmax e^{theta lambda t} g(t) dt, Gauss-Legendre on unit panels with n_nodes each.
LaplaceResult laplace_theta(const ComplexFn& g, Complex lambda, double Tmax, int n_nodes, const CyclicStructure& c);

// (1/2pi) int_{-T}^{T} e^{c x - i x y} G(-c conj(theta) + i y conj(theta)) dy: trapezoid on n_nodes intervals,
// tanh-sinh taper over the outer 10% of [-T, T]. G is sampled once at construction.
class ContourInversion {
 public:
  ContourInversion(const ComplexFn& G, double cshift, double T, int n_nodes, const CyclicStructure& c);
  Complex operator()(double x) const;

  static double taper(double s);

 private:
  double cshift_;
  std::vector<double> y_;
  std::vector<double> w_;
  std::vector<Complex> G_;
};

Complex laplace_theta_inverse(const ComplexFn& G, double x, double cshift, double T, int n_nodes, const CyclicStructure& c);

// <g, e^{theta lambda x}>_0; ip must carry a = 0.
Complex f_r_transform(const ComplexFn& g, Complex lambda, const WeightedInnerProduct& ip, Exec exec = Exec::Parallel);

// <g, E_mu(lambda .)>_a with ip.a = a. ParameterError unless alpha_0 = 0.
Complex dunkl_transform_F(const IndexVector& mu, double a, const ComplexFn& g, Complex lambda, const WeightedInnerProduct& ip,
                          double series_range = 32.0, Exec exec = Exec::Parallel);

struct InverseTransformOptions {
  double T = 8.0;          // lambda cutoff
  int n_nodes = 800;       // trapezoid intervals on [-T, T]
  double Tmax = 6.0;       // spatial cutoff for the Weyl integrals
  int rl_nodes = 48;
  double fd_step = 1e-3;
};

// r = 2, alpha_0 = 0: H = inverse Fourier of Ghat, K = |x|^{-a} H, then
// g = (1/c) T_0 R*^{-1} K for grade 0 and g = (1/c) T_1 x R*^{-1} x^{-1} K for grade 1.
class DunklInverse {
 public:
  DunklInverse(const IndexVector& mu, double a, const ComplexFn& Ghat, InverseTransformOptions opt = {});
  Complex operator()(double x, int grade_k) const;

 private:
  Complex K(Complex z) const;

  IndexVector mu_;
  double a_;
  InverseTransformOptions opt_;
  double beta_;
  double c_;
  ContourInversion H_;
};

Complex dunkl_transform_inverse(const IndexVector& mu, double a, const ComplexFn& Ghat, double x, int grade_k,
                                const InverseTransformOptions& opt = {});

// F_mu(D g)(lambda) + conj(theta lambda) F_mu g(lambda); notes carry |F_mu(D g) + theta lambda F_mu g|.
VerificationReport eigen_property_check(const IndexVector& mu, double a, const RayTestFunction& g, Complex lambda,
                                        const WeightedInnerProduct& ip, double tolerance = 1e-6);

// F_mu g(lambda) against F_r(|x|^a V* g)(lambda).
VerificationReport factorization_check(const IndexVector& mu, double a, const RayTestFunction& g, Complex lambda,
                                       const WeightedInnerProduct& ip, const VStarOptions& vopt, double tolerance = 1e-6);

// For g in grade k, F_r g(omega lambda) = omega^k F_r g(lambda), i.e. F_r g lies in grade r - k.
// Checked with the averaging projector on 16 points of |lambda| = 1.5.
VerificationReport f_r_grade_check(const RayTestFunction& g, int k, const WeightedInnerProduct& ip, double tolerance = 1e-9);

}  // namespace rdunkl
