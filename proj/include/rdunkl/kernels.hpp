#pragma once

#include <complex>
#include <exception>
#include <span>
#include <vector>

#include "rdunkl/quadrature.hpp"

// Hot loops in two flavours: serial reference and OpenMP. Both reduce per-outer-index
// partial sums in index order, so their results agree bit for bit.
namespace rdunkl::kernels {

using Complex = std::complex<double>;

namespace detail {

// prod_d w_d * f(v) over every index tuple whose first index is fixed to i0.
template <class F>
Complex tensor_slice(const std::vector<QuadratureRule>& dims, size_t i0, F& f) {
  const size_t d = dims.size();
  std::vector<size_t> idx(d, 0);
  std::vector<double> v(d);
  idx[0] = i0;
  Complex acc = 0.0;
  while (true) {
    double w = 1.0;
    for (size_t k = 0; k < d; ++k) {
      v[k] = dims[k].nodes[idx[k]];
      w *= dims[k].weights[idx[k]];
    }
    acc += w * f(std::span<const double>(v));
    size_t k = d;
    while (k > 1) {
      --k;
      if (++idx[k] < dims[k].size()) break;
      idx[k] = 0;
      if (k == 1) return acc;
    }
    if (d == 1) return acc;
  }
}

template <class Body>
void parallel_for(long n, Body&& body) {
  std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(rdunkl_kernel_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace detail

template <class F>
Complex tensor_sum_serial(const std::vector<QuadratureRule>& dims, F&& f) {
  if (dims.empty()) return f(std::span<const double>());
  Complex total = 0.0;
  for (size_t i = 0; i < dims[0].size(); ++i) total += detail::tensor_slice(dims, i, f);
  return total;
}

template <class F>
Complex tensor_sum_parallel(const std::vector<QuadratureRule>& dims, F&& f) {
  if (dims.empty()) return f(std::span<const double>());
  std::vector<Complex> partial(dims[0].size());
  detail::parallel_for(static_cast<long>(partial.size()),
                       [&](long i) { partial[static_cast<size_t>(i)] = detail::tensor_slice(dims, static_cast<size_t>(i), f); });
  Complex total = 0.0;
  for (const auto& p : partial) total += p;
  return total;
}

// sum_i w_i sum_{m<r} f(i, m).
template <class F>
Complex ray_sum_serial(const std::vector<double>& weights, int r, F&& f) {
  Complex total = 0.0;
  for (size_t i = 0; i < weights.size(); ++i) {
    Complex inner = 0.0;
    for (int m = 0; m < r; ++m) inner += f(i, m);
    total += weights[i] * inner;
  }
  return total;
}

template <class F>
Complex ray_sum_parallel(const std::vector<double>& weights, int r, F&& f) {
  std::vector<Complex> partial(weights.size());
  detail::parallel_for(static_cast<long>(weights.size()), [&](long li) {
    size_t i = static_cast<size_t>(li);
    Complex inner = 0.0;
    for (int m = 0; m < r; ++m) inner += f(i, m);
    partial[i] = weights[i] * inner;
  });
  Complex total = 0.0;
  for (const auto& p : partial) total += p;
  return total;
}

// out[i] = f(i), evaluated in parallel.
template <class T, class F>
std::vector<T> map_parallel(size_t n, F&& f) {
  std::vector<T> out(n);
  detail::parallel_for(static_cast<long>(n), [&](long i) { out[static_cast<size_t>(i)] = f(static_cast<size_t>(i)); });
  return out;
}

}  // namespace rdunkl::kernels
