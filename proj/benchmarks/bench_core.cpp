#include <benchmark/benchmark.h>

#include "stsig/kurosh.hpp"
#include "stsig/reducer.hpp"
#include "stsig/schreier.hpp"
#include "stsig/sweep.hpp"

namespace {

using namespace stsig;

void BM_OracleVsFormula(benchmark::State& state) {
  const auto instances = enumerate_instances(state.range(0), state.range(1));
  for (auto _ : state) {
    std::int64_t mismatches = 0;
    for (const ConstructionInstance& inst : instances) {
      const Signature oracle = stabilizer_signature(
          inst.parent, theta_of(inst), static_cast<int>(inst.n));
      if (oracle != child_signature(inst)) ++mismatches;
    }
    benchmark::DoNotOptimize(mismatches);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(instances.size()));
}
BENCHMARK(BM_OracleVsFormula)->Args({3, 4})->Args({4, 6});

void BM_SchreierGenerators(benchmark::State& state) {
  const ConstructionInstance inst{
      Family::A, Signature{1, 1, 1}, state.range(0), {1}, {1}};
  const ThetaSpec theta = theta_of(inst);
  for (auto _ : state) {
    const Transversal trans =
        schreier_transversal(theta, designated_letter(inst.family));
    benchmark::DoNotOptimize(schreier_generators(theta, trans));
  }
}
BENCHMARK(BM_SchreierGenerators)->Arg(6)->Arg(24)->Arg(96);

void BM_ReduceToCanonical(benchmark::State& state) {
  const Signature sig{state.range(0), 1, state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_canonical(sig));
}
BENCHMARK(BM_ReduceToCanonical)->Args({4, 1})->Args({20, 20})->Args({1000, 999});

void BM_VerifyCertificate(benchmark::State& state) {
  const Certificate cert = reduce_to_canonical({state.range(0), 1, state.range(1)});
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert));
}
BENCHMARK(BM_VerifyCertificate)->Args({4, 1})->Args({20, 20});

}  // namespace

BENCHMARK_MAIN();
