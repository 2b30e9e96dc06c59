#include "rdunkl/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rdunkl/errors.hpp"
#include "rdunkl/kernels.hpp"
#include "rdunkl/quadrature.hpp"

namespace rdunkl {

LaplaceResult laplace_theta(const ComplexFn& g, Complex lambda, double Tmax, int n_nodes, const CyclicStructure& c) {
  if (!(Tmax > 0.0)) throw ParameterError("laplace_theta needs Tmax > 0");
  int panels = std::max(1, static_cast<int>(std::ceil(Tmax)));
  QuadratureRule rule = composite_legendre_rule(panels, n_nodes, 0.0, Tmax);
  Complex rate = c.theta * lambda;
  Complex acc = 0.0;
  for (size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * std::exp(rate * rule.nodes[i]) * g(rule.nodes[i]);
  LaplaceResult res;
  res.value = acc;
  res.tail_bound = std::abs(std::exp(rate * Tmax) * g(Tmax));
  res.tail_warning = !(res.tail_bound < 1e-14);
  return res;
}

double ContourInversion::taper(double s) {
  if (s <= 0.0) return 1.0;
  if (s >= 1.0) return 0.0;
  return 0.5 * (1.0 - std::tanh(0.5 * std::numbers::pi * std::sinh(3.0 * (2.0 * s - 1.0))));
}

ContourInversion::ContourInversion(const ComplexFn& G, double cshift, double T, int n_nodes, const CyclicStructure& c)
    : cshift_(cshift) {
  if (!(T > 0.0) || n_nodes < 2) throw ParameterError("contour inversion needs T > 0 and at least two intervals");
  double h = 2.0 * T / n_nodes;
  Complex tb = std::conj(c.theta);
  y_.resize(static_cast<size_t>(n_nodes + 1));
  w_.resize(y_.size());
  for (int j = 0; j <= n_nodes; ++j) {
    double y = -T + j * h;
    double s = (std::abs(y) - 0.9 * T) / (0.1 * T);
    double w = h * taper(s);
    if (j == 0 || j == n_nodes) w *= 0.5;
    y_[static_cast<size_t>(j)] = y;
    w_[static_cast<size_t>(j)] = w;
  }
  G_ = kernels::map_parallel<Complex>(y_.size(), [&](size_t j) {
    if (w_[j] == 0.0) return Complex(0.0);
    return G(-cshift * tb + Complex(0.0, y_[j]) * tb);
  });
}

Complex ContourInversion::operator()(double x) const {
  Complex acc = 0.0;
  for (size_t j = 0; j < y_.size(); ++j) {
    if (w_[j] == 0.0) continue;
    acc += w_[j] * std::exp(Complex(0.0, -x * y_[j])) * G_[j];
  }
  return std::exp(cshift_ * x) * acc / (2.0 * std::numbers::pi);
}

Complex laplace_theta_inverse(const ComplexFn& G, double x, double cshift, double T, int n_nodes, const CyclicStructure& c) {
  return ContourInversion(G, cshift, T, n_nodes, c)(x);
}

Complex f_r_transform(const ComplexFn& g, Complex lambda, const WeightedInnerProduct& ip, Exec exec) {
  Complex rate = CyclicStructure(ip.r).theta * lambda;
  ComplexFn kernel = [rate](Complex z) { return std::exp(rate * z); };
  return inner_product(g, kernel, ip, exec);
}

Complex dunkl_transform_F(const IndexVector& mu, double a, const ComplexFn& g, Complex lambda, const WeightedInnerProduct& ip,
                          double series_range, Exec exec) {
  if (std::abs(mu.alpha(0)) > 1e-14) throw ParameterError("the r-Dunkl transform needs alpha_0 = 0");
  if (mu.r() != ip.r) throw ParameterError("index vector and inner product disagree on r");
  if (std::abs(ip.a - a) > 1e-14) throw ParameterError("inner product weight differs from the transform's a");
  ComplexFn kernel = [&](Complex z) { return dunkl_kernel_value(mu, lambda * z, series_range); };
  return inner_product(g, kernel, ip, exec);
}

DunklInverse::DunklInverse(const IndexVector& mu, double a, const ComplexFn& Ghat, InverseTransformOptions opt)
    : mu_(mu),
      a_(a),
      opt_(opt),
      beta_(0.0),
      c_(0.0),
      // r = 2 and c = 0: the contour is the real line s = y, so H(x) = (1/2pi) int e^{i lambda x} Ghat(lambda).
      H_([&Ghat](Complex s) { return Ghat(-s); }, 0.0, opt.T, opt.n_nodes, CyclicStructure(2)) {
  if (mu.r() != 2) throw ParameterError("the inverse r-Dunkl transform is implemented for r = 2");
  if (std::abs(mu.alpha(0)) > 1e-14) throw ParameterError("the inverse r-Dunkl transform needs alpha_0 = 0");
  beta_ = mu.alpha(1) + 0.5;
  if (!(beta_ > 0.0)) throw ParameterError("the inverse r-Dunkl transform needs alpha_1 > -1/2");
  c_ = 2.0 * std::tgamma(mu.alpha(1) + 1.0) / (std::tgamma(beta_) * std::sqrt(std::numbers::pi));
}

Complex DunklInverse::K(Complex z) const {
  double x = z.real();
  return std::pow(std::abs(x), -a_) * H_(x);
}

Complex DunklInverse::operator()(double x, int grade_k) const {
  if (x == 0.0) throw DomainError("inverse transform is evaluated away from the origin");
  AdjointInverseOptions ao{opt_.Tmax, opt_.rl_nodes, opt_.fd_step};
  ComplexFn Kf = [this](Complex z) { return K(z); };
  ComplexFn Kx = [this](Complex z) { return K(z) / std::conj(z); };
  auto term = [&](Complex z) -> Complex {
    if (grade_k % 2 == 0) return apply_R_adjoint_inverse(beta_, a_, Kf, z, 2, ao);
    return std::conj(z) * apply_R_adjoint_inverse(beta_, a_, Kx, z, 2, ao);
  };
  Complex plus = term(Complex(x));
  Complex minus = term(Complex(-x));
  Complex projected = (grade_k % 2 == 0) ? 0.5 * (plus + minus) : 0.5 * (plus - minus);
  return projected / c_;
}

Complex dunkl_transform_inverse(const IndexVector& mu, double a, const ComplexFn& Ghat, double x, int grade_k,
                                const InverseTransformOptions& opt) {
  return DunklInverse(mu, a, Ghat, opt)(x, grade_k);
}

VerificationReport eigen_property_check(const IndexVector& mu, double a, const RayTestFunction& g, Complex lambda,
                                        const WeightedInnerProduct& ip, double tolerance) {
  CyclicStructure c(mu.r());
  Complex Fg = dunkl_transform_F(mu, a, g.as_function(), lambda, ip);
  Complex FDg = dunkl_transform_F(mu, a, apply_D(mu, g).as_function(), lambda, ip);
  Complex tl = c.theta * lambda;
  double scale = std::max({1.0, std::abs(FDg), std::abs(tl * Fg)});
  double res = std::abs(FDg + std::conj(tl) * Fg) / scale;
  double res_lit = std::abs(FDg + tl * Fg) / scale;
  nlohmann::json params = {{"r", mu.r()}, {"alpha", mu.alphas()}, {"a", a}, {"lambda", {lambda.real(), lambda.imag()}}};
  return VerificationReport::bound("transform.eigen_property", params, res, tolerance,
                                   {"eigenvalue -conj(theta lambda); with -theta lambda the residual is " + std::to_string(res_lit)});
}

VerificationReport factorization_check(const IndexVector& mu, double a, const RayTestFunction& g, Complex lambda,
                                       const WeightedInnerProduct& ip, const VStarOptions& vopt, double tolerance) {
  Complex lhs = dunkl_transform_F(mu, a, g.as_function(), lambda, ip);
  // Same nodes with the t^a factor dropped.
  WeightedInnerProduct ip0 = ip;
  ip0.a = 0.0;
  for (size_t i = 0; i < ip0.weights.size(); ++i) ip0.weights[i] = ip.weights[i] / std::pow(ip.nodes[i], a);
  VStar vs(mu, a, vopt);
  ComplexFn gf = g.as_function();
  ComplexFn h = [&](Complex z) { return std::pow(std::abs(z), a) * vs(gf, z); };
  Complex rhs = f_r_transform(h, lambda, ip0);
  double res = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
  nlohmann::json params = {{"r", mu.r()}, {"alpha", mu.alphas()}, {"a", a}, {"lambda", {lambda.real(), lambda.imag()}}};
  return VerificationReport::bound("transform.factorization", params, res, tolerance);
}

VerificationReport f_r_grade_check(const RayTestFunction& g, int k, const WeightedInnerProduct& ip, double tolerance) {
  int r = ip.r;
  CyclicStructure c(r);
  ComplexFn gf = g.as_function();
  double res = 0.0, scale = 0.0;
  for (int j = 0; j < 16; ++j) {
    Complex lambda = std::polar(1.5, 2.0 * std::numbers::pi * j / 16.0);
    Complex F = f_r_transform(gf, lambda, ip);
    Complex proj = 0.0;
    for (int n = 0; n < r; ++n)
      proj += c.omega_pow(static_cast<long>(r - k) * n) * f_r_transform(gf, c.omega_pow(n) * lambda, ip);
    proj /= static_cast<double>(r);
    res = std::max(res, std::abs(F - proj));
    scale = std::max(scale, std::abs(F));
  }
  return VerificationReport::bound("transform.grade_mapping", {{"r", r}, {"grade", k}, {"image_grade", c.mod(r - k)}},
                                   scale > 0.0 ? res / std::max(1.0, scale) : res, tolerance);
}

}  // namespace rdunkl
