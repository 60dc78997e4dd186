// OpenMP check_Ct against the serial reference.

#include "catquot/conditions.hpp"
#include "catquot/named.hpp"

#include <benchmark/benchmark.h>

using namespace catquot;

namespace {

void BM_CtParallel(benchmark::State &state) {
  const PosetAction b = boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_Ct(*b.category, b.action, 3).verdict);
}

void BM_CtSerial(benchmark::State &state) {
  const PosetAction b = boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_Ct_serial(*b.category, b.action, 3).verdict);
}

void BM_StackedParallel(benchmark::State &state) {
  const PosetAction p = stacked_antichains(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_C(*p.category, p.action).verdict);
}

} // namespace

BENCHMARK(BM_CtParallel)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CtSerial)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StackedParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
