#include <benchmark/benchmark.h>

#include "dposet/enumeration.hpp"
#include "dposet/pairing.hpp"

namespace {

using dposet::Execution;
using dposet::PosetClass;

void BM_PairingMatrix(benchmark::State& state, Execution exec) {
  const auto& basis = dposet::enumerate(PosetClass::wnp, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dposet::pairing_matrix(basis, exec));
  state.SetLabel(std::to_string(basis.size()) + " posets");
}

void BM_EnumerateWN(benchmark::State& state, Execution exec) {
  dposet::enumerate(PosetClass::wnp, static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(dposet::count(PosetClass::wnp, static_cast<int>(state.range(0)), exec));
}

void BM_EnumerateDP(benchmark::State& state, Execution exec) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dposet::enumerate_uncached(PosetClass::dp, static_cast<int>(state.range(0)), exec));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_PairingMatrix, serial, Execution::serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PairingMatrix, parallel, Execution::parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateWN, serial, Execution::serial)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateWN, parallel, Execution::parallel)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateDP, serial, Execution::serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateDP, parallel, Execution::parallel)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
