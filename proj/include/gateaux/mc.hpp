#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gateaux {

/// Monte Carlo probe of how rare non-differentiable points are: standard
/// Gaussian samples in R^dim, each classified against the weighted atomic
/// space. A Gaussian coordinate is zero with probability zero, so the
/// expected fraction of non-differentiable samples is exactly 0; the run
/// makes that observable and reproducible.
struct McConfig {
  std::size_t dimension = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// Per-atom weights; empty means all ones. Must be finite and positive.
  std::vector<double> weights;
};

struct McReport {
  std::size_t dimension = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t non_differentiable = 0;
  double fraction = 0.0;
  std::string generator;
  std::uint64_t shard_size = 0;
  std::uint64_t shards = 0;
};

/// Sharded run; uses all available workers when built with OpenMP. Sample
/// counts per shard and per-shard substream seeds are fixed by (seed,
/// shard index) alone, so the report is byte-identical for any worker
/// count, including the serial reference below.
McReport monte_carlo_null(const McConfig& config);

/// Single-threaded reference implementation with identical output.
McReport monte_carlo_null_serial(const McConfig& config);

}  // namespace gateaux
