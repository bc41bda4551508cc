// Serial reference vs OpenMP for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include "kdw/brieskorn.hpp"
#include "kdw/induction.hpp"

namespace {

kdw::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kdw::Exec::Serial : kdw::Exec::Parallel;
}

void BM_EnumerateHoms(benchmark::State& state) {
  const kdw::psl2::Group g(static_cast<std::uint32_t>(state.range(1)));
  const kdw::brieskorn::Triple ks = state.range(1) == 29 ? kdw::brieskorn::Triple{3, 5, 7}
                                                         : kdw::brieskorn::Triple{11, 3, 5};
  for (auto _ : state) benchmark::DoNotOptimize(kdw::brieskorn::enumerate_homs_brute(g, ks, exec_of(state)));
}
BENCHMARK(BM_EnumerateHoms)->ArgNames({"parallel", "p"})->Args({0, 11})->Args({1, 11})->Args({0, 29})->Args({1, 29})
    ->Unit(benchmark::kMillisecond);

void BM_InductionTable(benchmark::State& state) {
  const kdw::psl2::Group g(static_cast<std::uint32_t>(state.range(1)));
  const auto h = g.torus_B();
  for (auto _ : state) benchmark::DoNotOptimize(kdw::induction_table(g, h, exec_of(state)));
}
BENCHMARK(BM_InductionTable)->ArgNames({"parallel", "p"})->Args({0, 13})->Args({1, 13})->Args({0, 29})->Args({1, 29})
    ->Unit(benchmark::kMillisecond);

void BM_Classes(benchmark::State& state) {
  const kdw::psl2::Group g(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(g.classes(exec_of(state)));
}
BENCHMARK(BM_Classes)->ArgNames({"parallel", "p"})->Args({0, 29})->Args({1, 29})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
