#include <random>

#include <benchmark/benchmark.h>

#include "opaque/coverage.hpp"
#include "opaque/ngon.hpp"
#include "opaque/selftest.hpp"

using namespace opaque;

static void BM_CoverageNgon(benchmark::State& state) {
  const Barrier b = validate_and_build(generate_ngon(static_cast<int>(state.range(0)), Rational(1, 100)));
  std::size_t faces = 0;
  for (auto _ : state) {
    const auto r = compute_coverage(b);
    faces = r.stats.faces;
    benchmark::DoNotOptimize(r.regions.size());
  }
  state.counters["faces"] = static_cast<double>(faces);
}
BENCHMARK(BM_CoverageNgon)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_CoverageRandom(benchmark::State& state) {
  std::mt19937_64 rng(99);
  std::vector<Barrier> barriers;
  for (int i = 0; i < 16; ++i) {
    barriers.push_back(validate_and_build(random_barrier(rng, static_cast<std::size_t>(state.range(0)), 10)));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_coverage(barriers[k++ % barriers.size()]).regions.size());
  }
}
BENCHMARK(BM_CoverageRandom)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
