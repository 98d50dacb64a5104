#include <doctest.h>

#include <cmath>

#include "gateaux/sequences.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

using namespace gateaux;
using testsupport::DyadicGen;
using testsupport::rel_close;

TEST_CASE("geometric-tail coordinates and norm") {
  // x_n = 2^-n from the start.
  const GeoTailSequence x({}, 1.0, 0.5);
  CHECK(x.coordinate(0) == 1.0);
  CHECK(x.coordinate(5) == 0.03125);
  CHECK(seq_l1_norm(x) == 2.0);

  // Explicit prefix, then a tail.
  const GeoTailSequence y({3.0, -1.0, 2.0}, 1.0, 0.5);
  CHECK(y.coordinate(1) == -1.0);
  CHECK(y.coordinate(3) == 1.0);
  CHECK(y.coordinate(4) == 0.5);
  CHECK(seq_l1_norm(y) == 8.0);

  // Prefix only.
  const GeoTailSequence z({1.0, -2.0}, 0.0, 0.5);
  CHECK(seq_l1_norm(z) == 3.0);
  CHECK(z.coordinate(2) == 0.0);
  CHECK(z.coordinate(100) == 0.0);

  CHECK_THROWS_AS(GeoTailSequence({}, 1.0, 1.0), input_error);
  CHECK_THROWS_AS(GeoTailSequence({}, 1.0, -1.5), input_error);
}

TEST_CASE("seq_in_g catches zeros in prefix and tail") {
  CHECK(seq_in_g(GeoTailSequence({1.0, -2.0}, 1.0, 0.5)));
  CHECK_FALSE(seq_in_g(GeoTailSequence({1.0, 0.0, 2.0}, 1.0, 0.5)));
  CHECK_FALSE(seq_in_g(GeoTailSequence({1.0}, 0.0, 0.5)));
  CHECK_FALSE(seq_in_g(GeoTailSequence({1.0}, 1.0, 0.0)));
}

TEST_CASE("seq_gateaux sums signs against the direction") {
  const GeoTailSequence x({}, 1.0, 0.5);  // all positive
  CHECK(seq_gateaux(x, FiniteSupportDirection({{3, 1.0}})) == 1.0);
  CHECK(seq_gateaux(x, FiniteSupportDirection({{0, 2.0}, {4, -1.5}})) ==
        0.5);

  // Alternating signs through a negative ratio.
  const GeoTailSequence alt({}, 1.0, -0.5);
  CHECK(seq_gateaux(alt, FiniteSupportDirection({{1, 1.0}})) == -1.0);
  CHECK(seq_gateaux(alt, FiniteSupportDirection({{2, 1.0}})) == 1.0);

  CHECK(seq_gateaux(x, FiniteSupportDirection()) == 0.0);
  CHECK_THROWS_AS(
      seq_gateaux(GeoTailSequence({0.0}, 1.0, 0.5),
                  FiniteSupportDirection({{0, 1.0}})),
      precondition_error);
}

TEST_CASE("seq_classify finds the smallest zero coordinate") {
  const SeqClassifyReport smooth =
      seq_classify(GeoTailSequence({1.0, -2.0}, 1.0, 0.5));
  CHECK(smooth.differentiable);
  CHECK_FALSE(smooth.witness_index.has_value());

  const SeqClassifyReport prefix_zero =
      seq_classify(GeoTailSequence({1.0, 0.0, 2.0}, 1.0, 0.5));
  CHECK_FALSE(prefix_zero.differentiable);
  CHECK(prefix_zero.witness_index == std::size_t{1});
  CHECK(prefix_zero.one_sided == DirectionalLimit::from_sides(1.0, -1.0));

  // Tail vanishes: the first zero is the first tail coordinate.
  const SeqClassifyReport tail_zero =
      seq_classify(GeoTailSequence({1.0, 2.0}, 0.0, 0.5));
  CHECK(tail_zero.witness_index == std::size_t{2});

  // Zero ratio: x_N = a, everything after is zero.
  const SeqClassifyReport ratio_zero =
      seq_classify(GeoTailSequence({1.0}, 2.0, 0.0));
  CHECK(ratio_zero.witness_index == std::size_t{2});
}

TEST_CASE("sign-flip witness keeps the remainder ratio at one") {
  const GeoTailSequence x({}, 1.0, 0.5);
  const FrechetFailureRow row = frechet_failure_witness(x, 3);
  CHECK(row.index == 3);
  CHECK(row.direction_value == -0.25);
  CHECK(row.direction_norm == 0.25);
  CHECK(row.ratio == 1.0);

  // Far down the tail the direction is tiny but the ratio has not moved.
  const FrechetFailureRow deep = frechet_failure_witness(x, 40);
  CHECK(deep.direction_norm == std::ldexp(1.0, -39));
  CHECK(deep.ratio == 1.0);

  // Negative ratio: the flip still costs the full perturbation.
  const GeoTailSequence alt({}, 1.0, -0.5);
  CHECK(frechet_failure_witness(alt, 5).ratio == 1.0);

  CHECK_THROWS_AS(frechet_failure_witness(x, 0), input_error);
  CHECK_THROWS_AS(
      frechet_failure_witness(GeoTailSequence({0.0}, 1.0, 0.5), 1),
      precondition_error);
  // 0.5^2000 underflows to exact zero: no usable witness coordinate.
  CHECK_THROWS_AS(frechet_failure_witness(x, 2000), precondition_error);
}

TEST_CASE("ratio one for sixty tail offsets with halving norms") {
  const GeoTailSequence x({}, 1.0, 0.5);
  for (std::size_t k = 1; k <= 60; ++k) {
    const FrechetFailureRow row = frechet_failure_witness(x, k);
    CHECK(rel_close(row.ratio, 1.0, 1e-12));
    CHECK(row.direction_norm == std::ldexp(1.0, 1 - static_cast<int>(k)));
    // The sparse direction reproduces the tabulated norm and ratio.
    const FiniteSupportDirection h = row.direction();
    CHECK(h.l1_norm() == row.direction_norm);
    CHECK(seq_remainder_ratio(x, h) == row.ratio);
  }
}

TEST_CASE("sequence derivative agrees with atomic truncations") {
  // The first coordinates of x as atoms of a counting-measure space: for
  // directions supported there, both models must produce the same number.
  DyadicGen gen(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> prefix(3);
    for (double& v : prefix) v = gen.nonzero_value(10);
    const GeoTailSequence x(std::vector<double>(prefix), 2.0, 0.5);

    const std::size_t cut = 8;
    std::vector<double> head(cut);
    for (std::size_t n = 0; n < cut; ++n) head[n] = x.coordinate(n);
    const MeasureSpace space =
        MeasureSpace::from_weights(std::vector<double>(cut, 1.0));
    const SimpleFunction f(head);

    std::map<std::size_t, double> entries;
    std::vector<double> dense(cut, 0.0);
    for (int i = 0; i < 4; ++i) {
      const std::size_t n = gen.uniform_index(cut);
      const double v = gen.value(10);
      entries[n] = v;
      dense[n] = v;
    }
    const double from_seq =
        seq_gateaux(x, FiniteSupportDirection(entries));
    const double from_atoms =
        gateaux_derivative(space, f, SimpleFunction(dense));
    CHECK(rel_close(from_seq, from_atoms, 1e-12));
  }
}

TEST_CASE("seq_gateaux is linear and bounded by the direction norm") {
  DyadicGen gen(42);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> prefix(1 + gen.uniform_index(5));
    for (double& v : prefix) v = gen.nonzero_value(10);
    const GeoTailSequence x(std::move(prefix), gen.nonzero_value(8),
                            0.5);

    std::map<std::size_t, double> e1, e2, sum;
    for (int i = 0; i < 3; ++i) {
      const std::size_t n = gen.uniform_index(12);
      e1[n] = gen.value(10);
      const std::size_t m = gen.uniform_index(12);
      e2[m] = gen.value(10);
    }
    for (const auto& [n, v] : e1) sum[n] += v;
    for (const auto& [n, v] : e2) sum[n] += v;
    const FiniteSupportDirection h1(e1), h2(e2), h12(sum);

    CHECK(rel_close(seq_gateaux(x, h12),
                    seq_gateaux(x, h1) + seq_gateaux(x, h2), 1e-12));
    CHECK(std::abs(seq_gateaux(x, h1)) <= h1.l1_norm() + 1e-12);
  }
}
