#include <benchmark/benchmark.h>

#include "projlab/boolean.hpp"
#include "projlab/characteristics.hpp"
#include "projlab/closedforms.hpp"
#include "projlab/indexsets.hpp"
#include "projlab/montecarlo.hpp"
#include "projlab/spaces.hpp"

using namespace projlab;

static void BM_HaarUnitary(benchmark::State& state) {
  CounterRng rng(1, 0);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_haar_unitary(n, rng));
}
BENCHMARK(BM_HaarUnitary)->Arg(2)->Arg(8)->Arg(16);

static void BM_TorusExpSum(benchmark::State& state) {
  IndexSet j = enumerate_full(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(torus_exp_sum(j, 10000, 3));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_TorusExpSum)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BooleanExact(benchmark::State& state) {
  SubsetFamily f = SubsetFamily::homog(static_cast<unsigned>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(boolean_proj_exact(f));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_BooleanExact)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_CharacteristicOracle(benchmark::State& state) {
  SequenceSpace s = SequenceSpace::mixed(1, 2, 2, 2);
  MultiIndex a(std::vector<unsigned>{2, 1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_bruteforce(s, a));
}
BENCHMARK(BM_CharacteristicOracle)->Unit(benchmark::kMillisecond);

static void BM_LebesgueConstant(benchmark::State& state) {
  auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_constant(m));
}
BENCHMARK(BM_LebesgueConstant)->Arg(10)->Arg(200);

static void BM_ProjL1Complex(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(proj_l1_complex(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ProjL1Complex)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
