// Serial reference vs OpenMP kernels on the theta groups the verifier uses.
//
//   ./bench_kernels --benchmark_filter=AbelianSearch
//   OMP_NUM_THREADS=4 ./bench_kernels

#include <benchmark/benchmark.h>

#include "theta/heis.hpp"
#include "theta/lattice.hpp"

namespace {

using theta::ConcreteGroup;
using theta::FiniteAbelianGroup;
using theta::ThetaGroup;

// |K| = 6, 8 and the elementary abelian 2x2x2
const FiniteAbelianGroup& base_for(std::int64_t which) {
    static const FiniteAbelianGroup bases[] = {
        FiniteAbelianGroup::make({6}),
        FiniteAbelianGroup::make({8}),
        FiniteAbelianGroup::make({2, 2, 2}),
    };
    return bases[which];
}

const ConcreteGroup& concrete_for(std::int64_t which) {
    static const ConcreteGroup groups[] = {
        ConcreteGroup::from_theta(ThetaGroup(base_for(0))),
        ConcreteGroup::from_theta(ThetaGroup(base_for(1))),
        ConcreteGroup::from_theta(ThetaGroup(base_for(2))),
    };
    return groups[which];
}

void BM_AbelianSearchSerial(benchmark::State& state) {
    const auto& g = concrete_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta::abelian_search_serial(g).max_order);
    state.SetLabel(theta::format_group_spec(base_for(state.range(0))));
}

void BM_AbelianSearchParallel(benchmark::State& state) {
    const auto& g = concrete_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta::abelian_search(g).max_order);
    state.SetLabel(theta::format_group_spec(base_for(state.range(0))));
}

void BM_AssociativitySerial(benchmark::State& state) {
    const auto& g = concrete_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta::associativity_failures_serial(g));
}

void BM_AssociativityParallel(benchmark::State& state) {
    const auto& g = concrete_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta::associativity_failures(g));
}

void BM_CommutatorBridgeSerial(benchmark::State& state) {
    const ThetaGroup g(base_for(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(theta::commutator_bridge_mismatches_serial(g));
}

void BM_CommutatorBridgeParallel(benchmark::State& state) {
    const ThetaGroup g(base_for(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(theta::commutator_bridge_mismatches(g));
}

}  // namespace

BENCHMARK(BM_AbelianSearchSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AbelianSearchParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AssociativitySerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssociativityParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CommutatorBridgeSerial)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutatorBridgeParallel)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
