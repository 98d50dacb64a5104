// Compares the sharded sampler against the serial reference and reports
// throughput. The two must agree exactly; the point of the parallel path is
// speed, not different numbers.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "gateaux/mc.hpp"

namespace {

double seconds_for(gateaux::McReport (*fn)(const gateaux::McConfig&),
                   const gateaux::McConfig& config,
                   gateaux::McReport& out) {
  const auto start = std::chrono::steady_clock::now();
  out = fn(config);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  gateaux::McConfig config;
  config.dimension = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 32;
  config.samples = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 2000000;
  config.seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;

  std::printf("dimension %zu, %llu samples, seed %llu\n", config.dimension,
              static_cast<unsigned long long>(config.samples),
              static_cast<unsigned long long>(config.seed));

  gateaux::McReport serial, parallel;
  const double t_serial =
      seconds_for(gateaux::monte_carlo_null_serial, config, serial);
  const double t_parallel =
      seconds_for(gateaux::monte_carlo_null, config, parallel);

  std::printf("serial:   %8.3fs  (%.2fM samples/s)\n", t_serial,
              static_cast<double>(config.samples) / t_serial / 1e6);
  std::printf("parallel: %8.3fs  (%.2fM samples/s)  speedup %.2fx\n",
              t_parallel,
              static_cast<double>(config.samples) / t_parallel / 1e6,
              t_serial / t_parallel);

  if (serial.non_differentiable != parallel.non_differentiable ||
      serial.fraction != parallel.fraction) {
    std::printf("MISMATCH: serial and parallel runs disagree\n");
    return 1;
  }
  std::printf("agreement: serial and parallel counts identical (%llu)\n",
              static_cast<unsigned long long>(serial.non_differentiable));
  return 0;
}
