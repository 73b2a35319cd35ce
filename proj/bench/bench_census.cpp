#include <benchmark/benchmark.h>
#include <omp.h>

#include "latcube/census.hpp"
#include "latcube/oracle.hpp"
#include "latcube/symmetry.hpp"

using namespace latcube;

namespace {

// Second argument: worker threads, 0 meaning all available.
int threads_arg(const benchmark::State& state) {
  const auto t = static_cast<int>(state.range(1));
  return t == 0 ? omp_get_max_threads() : t;
}

void BM_CensusSequence(benchmark::State& state) {
  const i64 n = state.range(0);
  const int threads = threads_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(sequence(n, threads));
  state.counters["threads"] = threads;
}
BENCHMARK(BM_CensusSequence)->ArgsProduct({{50, 100, 150}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_IrreducibleList(benchmark::State& state) {
  const i64 n = state.range(0);
  const int threads = threads_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_irreducible_list(n, threads));
  state.counters["threads"] = threads;
}
BENCHMARK(BM_IrreducibleList)->ArgsProduct({{100, 200}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_OracleSequence(benchmark::State& state) {
  const i64 n = state.range(0);
  const int threads = threads_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_force_sequence(n, threads));
  state.counters["threads"] = threads;
}
BENCHMARK(BM_OracleSequence)->ArgsProduct({{12, 16, 20}, {1, 0}})->Unit(benchmark::kMillisecond);

const Cube& sample_cube() {
  static const Cube c = [] {
    const CubeRegistry reg = build_irreducible_list(15);
    for (const auto& rec : reg.records())
      if (rec.invariants.alpha0 == 48) return rec.cube;
    return reg.records().back().cube;
  }();
  return c;
}

void BM_InvariantsClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(invariants(sample_cube()));
}
BENCHMARK(BM_InvariantsClosedForm);

void BM_InvariantsByEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(invariants_by_enumeration(sample_cube()));
}
BENCHMARK(BM_InvariantsByEnumeration);

void BM_GeneralizedOrbit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generalized_orbit(sample_cube()));
}
BENCHMARK(BM_GeneralizedOrbit);

void BM_GeneralizedOrbitReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generalized_orbit_reference(sample_cube()));
}
BENCHMARK(BM_GeneralizedOrbitReference);

}  // namespace

BENCHMARK_MAIN();
