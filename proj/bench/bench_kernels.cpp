// Serial reference against the OpenMP kernels on the two hot loops.
#include <benchmark/benchmark.h>

#include <cmath>

#include "rdunkl/hilbert.hpp"
#include "rdunkl/mehler.hpp"

using namespace rdunkl;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_MehlerJ(benchmark::State& state) {
  MehlerWeight w = build_mehler_weight(IndexVector({0.4, 0.7, 1.3}), static_cast<int>(state.range(1)));
  Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(mehler_j(w, 2.0, exec));
  state.SetLabel(exec == Exec::Serial ? "serial" : "openmp");
}

void BM_InnerProduct(benchmark::State& state) {
  InnerProductOptions io;
  io.n_nodes = static_cast<int>(state.range(1));
  WeightedInnerProduct ip = make_inner_product(1.5, 4, io);
  ComplexFn f = [](Complex z) { return std::exp(-std::pow(z, 4)) * (1.0 + z); };
  ComplexFn g = [](Complex z) { return std::exp(-std::pow(z, 4)) * z * z; };
  Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(f, g, ip, exec));
  state.SetLabel(exec == Exec::Serial ? "serial" : "openmp");
}

}  // namespace

BENCHMARK(BM_MehlerJ)->ArgsProduct({{0, 1}, {24, 48}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InnerProduct)->ArgsProduct({{0, 1}, {200, 2000}})->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
