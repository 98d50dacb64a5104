#include "gateaux/mc.hpp"

#include <algorithm>
#include <cmath>

#include "gateaux/derivative.hpp"
#include "gateaux/rng.hpp"

namespace gateaux {

namespace {

// Fixed shard size: the shard layout, and with it every substream seed, is
// part of the output contract. Changing this constant changes results.
constexpr std::uint64_t kShardSize = 4096;

MeasureSpace space_for(const McConfig& config) {
  if (config.dimension == 0) {
    throw input_error("sampling needs dimension >= 1");
  }
  if (config.samples == 0) {
    throw input_error("sampling needs at least one sample");
  }
  std::vector<double> weights = config.weights;
  if (weights.empty()) {
    weights.assign(config.dimension, 1.0);
  }
  if (weights.size() != config.dimension) {
    throw input_error("weights must match the dimension");
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w <= 0.0) {
      throw input_error("sampling weights must be finite and positive");
    }
  }
  return MeasureSpace::from_weights(weights);
}

std::uint64_t count_shard(const MeasureSpace& space, std::uint64_t seed,
                          std::uint64_t shard, std::uint64_t count) {
  GaussianSampler gauss(mix_seed(seed, shard));
  std::vector<double> values(space.size());
  std::uint64_t bad = 0;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (double& v : values) v = gauss.next();
    if (!classify(space, SimpleFunction(values)).differentiable) ++bad;
  }
  return bad;
}

McReport run(const McConfig& config, bool parallel) {
  const MeasureSpace space = space_for(config);
  const std::uint64_t shards = (config.samples + kShardSize - 1) / kShardSize;

  std::uint64_t bad = 0;
  if (parallel) {
#ifdef GATEAUX_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(shards); ++i) {
      const auto shard = static_cast<std::uint64_t>(i);
      const std::uint64_t count =
          std::min(kShardSize, config.samples - shard * kShardSize);
      bad += count_shard(space, config.seed, shard, count);
    }
  } else {
    for (std::uint64_t shard = 0; shard < shards; ++shard) {
      const std::uint64_t count =
          std::min(kShardSize, config.samples - shard * kShardSize);
      bad += count_shard(space, config.seed, shard, count);
    }
  }

  McReport report;
  report.dimension = config.dimension;
  report.samples = config.samples;
  report.seed = config.seed;
  report.non_differentiable = bad;
  report.fraction =
      static_cast<double>(bad) / static_cast<double>(config.samples);
  report.generator = "splitmix64-polar";
  report.shard_size = kShardSize;
  report.shards = shards;
  return report;
}

}  // namespace

McReport monte_carlo_null(const McConfig& config) {
  return run(config, true);
}

McReport monte_carlo_null_serial(const McConfig& config) {
  return run(config, false);
}

}  // namespace gateaux
