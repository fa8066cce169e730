#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "opaque/coverage.hpp"

namespace opaque {

/// Random segments with integer endpoints in [-bound, bound]. Between one and
/// max_segments of them; about half of the barriers are built as chains.
std::vector<Segment> random_barrier(std::mt19937_64& rng, std::size_t max_segments, long bound);

/// Between one and max_segments segments, each starting where the previous
/// one ended, so the barrier is connected.
std::vector<Segment> random_chain(std::mt19937_64& rng, std::size_t max_segments, long bound);

struct VerifyOptions {
  std::size_t random_samples = 100;
  std::uint64_t sample_seed = 0;
};

/// Cross-checks a pipeline run against the oracle and the structural
/// invariants of the arrangement and the coverage. Returns one message per
/// violation; empty means everything held.
///
/// Oracle agreement is checked at every face representative, at every
/// arrangement vertex (not only candidate concurrences) and at random sample
/// points.
std::vector<std::string> verify_coverage(const Barrier& barrier, const CoverageWork& work,
                                         const VerifyOptions& options = {});

struct SelftestConfig {
  std::size_t count = 0;
  std::size_t max_segments = 6;
  long bound = 10;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  /// Passed through to the pipeline; nonzero breaks it on purpose.
  int depth_bias = 0;
};

struct SelftestReport {
  std::size_t instances = 0;
  std::size_t failed = 0;
  std::size_t violations = 0;
  /// Deterministic for a fixed config. Instance i is generated from seed
  /// config.seed + i, so "--count 1 --seed <that>" reproduces it alone.
  std::string text;

  bool ok() const { return failed == 0; }
};

SelftestReport run_selftest(const SelftestConfig& config);

}  // namespace opaque
