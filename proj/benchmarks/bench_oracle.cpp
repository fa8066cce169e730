#include <random>

#include <benchmark/benchmark.h>

#include "opaque/ngon.hpp"
#include "opaque/oracle.hpp"

using namespace opaque;

static void BM_OracleQuery(benchmark::State& state) {
  const Barrier b = validate_and_build(generate_ngon(static_cast<int>(state.range(0)), Rational(1, 100)));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coord(-150, 150);
  std::vector<Point> queries;
  for (int i = 0; i < 256; ++i) queries.emplace_back(Rational(coord(rng), 100), Rational(coord(rng), 100));
  std::size_t k = 0;
  std::size_t blocked = 0;
  for (auto _ : state) {
    blocked += is_blocked(queries[k++ % queries.size()], b).blocked;
  }
  benchmark::DoNotOptimize(blocked);
}
BENCHMARK(BM_OracleQuery)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
