#include <benchmark/benchmark.h>

#include "eofb/conc_bounds.hpp"
#include "eofb/densmat.hpp"
#include "eofb/envelope.hpp"
#include "eofb/eof_bounds.hpp"
#include "eofb/rng.hpp"
#include "eofb/roof.hpp"

using namespace eofb;

namespace {

BipartiteDensityMatrix sample_state(int m, int n) {
  return random_density_matrix(m, n, m * n, 0xBE7C4u + m * 100 + n);
}

void BM_TraceNorm(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto rho = sample_state(d, d);
  const auto realigned = realign(rho);
  for (auto _ : state) benchmark::DoNotOptimize(trace_norm(realigned));
}
BENCHMARK(BM_TraceNorm)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_ConcurrenceLower(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto rho = sample_state(d, d);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_lower(rho));
}
BENCHMARK(BM_ConcurrenceLower)->Arg(2)->Arg(3)->Arg(4);

void BM_BuildEnvelopes(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int grid = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_envelopes(m, grid, EnvelopeMethod::hull));
}
BENCHMARK(BM_BuildEnvelopes)
    ->Args({3, 1024})
    ->Args({3, 4096})
    ->Args({6, 4096})
    ->Args({10, 4096});

void BM_EnvelopeLookup(benchmark::State& state) {
  const auto table = build_envelopes(4, 4096, EnvelopeMethod::hull);
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-4;
    if (x > table.c_max) x = 0.0;
    benchmark::DoNotOptimize(epsilon_of(table, x));
  }
}
BENCHMARK(BM_EnvelopeLookup);

void BM_EofBounds(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto rho = sample_state(d, d);
  const auto table = build_envelopes(d);
  for (auto _ : state) benchmark::DoNotOptimize(eof_bounds(rho, table));
}
BENCHMARK(BM_EofBounds)->Arg(2)->Arg(3)->Arg(4);

void BM_RoofEstimate(benchmark::State& state) {
  const auto rho = random_density_matrix(3, 3, 3, 0x4007u);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        convex_roof_estimate(rho, RoofObjective::eof, 6, 2, 0x5EEDu));
}
BENCHMARK(BM_RoofEstimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
