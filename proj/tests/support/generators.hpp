#pragma once

#include <cstdint>
#include <vector>

#include "gateaux/measure.hpp"
#include "gateaux/rng.hpp"

namespace testsupport {

// Random instances on a dyadic grid: weights and values are multiples of
// 1/8 in small ranges. On this grid every product weight * value and every
// sum of at most a few hundred of them is exact in double precision, and so
// is f + t*h for power-of-two t down to 2^-40. Difference quotients then
// carry no rounding at all, which is what lets the exactness suites assert
// 1e-12 agreement (and often bitwise equality) instead of loose bounds.
class DyadicGen {
 public:
  explicit DyadicGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform_index(std::uint64_t n) { return rng_.next() % n; }

  // Multiple of 1/8 in [-bound, bound].
  double value(int bound) {
    const std::int64_t grid = 8 * bound;
    const auto k =
        static_cast<std::int64_t>(uniform_index(2 * grid + 1)) - grid;
    return static_cast<double>(k) / 8.0;
  }

  // Nonzero multiple of 1/8 in [-bound, bound].
  double nonzero_value(int bound) {
    double v = value(bound);
    while (v == 0.0) v = value(bound);
    return v;
  }

  // Multiple of 1/8 in (0, bound].
  double positive_value(int bound) {
    return static_cast<double>(uniform_index(8 * bound) + 1) / 8.0;
  }

  // zero_rate is given in 1/256 units.
  double value_with_zeros(int bound, std::uint32_t zero_rate_256) {
    if (rng_.next() % 256 < zero_rate_256) return 0.0;
    return value(bound);
  }

  gateaux::MeasureSpace space(std::size_t min_atoms, std::size_t max_atoms) {
    const std::size_t n =
        min_atoms + uniform_index(max_atoms - min_atoms + 1);
    std::vector<double> weights(n);
    for (double& w : weights) w = positive_value(8);
    return gateaux::MeasureSpace::from_weights(weights);
  }

  gateaux::SimpleFunction nonvanishing_function(std::size_t n, int bound) {
    std::vector<double> values(n);
    for (double& v : values) v = nonzero_value(bound);
    return gateaux::SimpleFunction(std::move(values));
  }

  // Roughly one in five values is an exact zero.
  gateaux::SimpleFunction function_with_zeros(std::size_t n, int bound) {
    std::vector<double> values(n);
    for (double& v : values) v = value_with_zeros(bound, 51);
    return gateaux::SimpleFunction(std::move(values));
  }

  gateaux::SplitMix64& raw() { return rng_; }

 private:
  gateaux::SplitMix64 rng_;
};

}  // namespace testsupport
