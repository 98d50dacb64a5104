#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gateaux/derivative.hpp"
#include "gateaux/errors.hpp"

namespace gateaux {

/// An absolutely summable sequence given in closed form: finitely many
/// explicit leading terms, then a geometric tail
///   x_n = tail_coeff * tail_ratio^(n - N)   for n >= N = prefix.size().
/// |tail_ratio| < 1 is required so the sum converges; the whole tail is zero
/// when tail_coeff = 0.
class GeoTailSequence {
 public:
  GeoTailSequence(std::vector<double> prefix, double tail_coeff,
                  double tail_ratio);

  std::size_t tail_start() const { return prefix_.size(); }
  const std::vector<double>& prefix() const { return prefix_; }
  double tail_coeff() const { return tail_coeff_; }
  double tail_ratio() const { return tail_ratio_; }

  /// x_n.
  double coordinate(std::size_t n) const;

 private:
  std::vector<double> prefix_;
  double tail_coeff_ = 0.0;
  double tail_ratio_ = 0.0;
};

/// A direction with finitely many nonzero coordinates, stored sparsely as
/// index -> value. Zero values are dropped.
class FiniteSupportDirection {
 public:
  FiniteSupportDirection() = default;
  explicit FiniteSupportDirection(std::map<std::size_t, double> entries);

  const std::map<std::size_t, double>& entries() const { return entries_; }
  double l1_norm() const;

 private:
  std::map<std::size_t, double> entries_;
};

/// Sum of |x_n|: the absolute prefix terms plus |a|/(1-|r|) for the tail.
double seq_l1_norm(const GeoTailSequence& x);

/// Whether every coordinate is nonzero. For the closed form this means all
/// prefix terms nonzero, tail_coeff != 0 and tail_ratio != 0.
bool seq_in_g(const GeoTailSequence& x);

/// Derivative of the summed-|.| norm at x along h: sum of sign(x_n)*h_n over
/// the support of h. Requires x with all coordinates nonzero (precondition
/// error; seq_classify reports the one-sided values at other points).
double seq_gateaux(const GeoTailSequence& x, const FiniteSupportDirection& h);

/// Differentiability analysis of the sequence norm at x.
struct SeqClassifyReport {
  bool differentiable = false;
  /// Smallest index with x_n = 0; present exactly when not differentiable.
  std::optional<std::size_t> witness_index;
  /// One-sided derivatives along the unit coordinate direction at the
  /// witness index.
  std::optional<DirectionalLimit> one_sided;
};

SeqClassifyReport seq_classify(const GeoTailSequence& x);

/// One row of the flat-remainder table: at coordinate m = N + k the
/// direction h = -2 x_m e_m flips the sign of that coordinate, and the
/// remainder of the linear approximation equals the full perturbation size,
/// so the ratio stays at 1 while ||h|| = 2|x_m| shrinks geometrically.
struct FrechetFailureRow {
  std::size_t k = 0;
  std::size_t index = 0;
  double direction_value = 0.0;
  double direction_norm = 0.0;
  double ratio = 0.0;

  /// The witness as a sparse direction: direction_value at index.
  FiniteSupportDirection direction() const {
    return FiniteSupportDirection({{index, direction_value}});
  }
};

/// phi(x + h) - phi(x) for a finitely supported perturbation, computed as an
/// exact finite sum over the support of h.
double seq_norm_delta(const GeoTailSequence& x,
                      const FiniteSupportDirection& h);

/// | phi(x+h) - phi(x) - D(h) | / ||h|| with D the derivative at x.
double seq_remainder_ratio(const GeoTailSequence& x,
                           const FiniteSupportDirection& h);

/// The sign-flip witness at tail offset k >= 1. Requires all coordinates of
/// x nonzero and a tail coordinate that has not underflowed to zero.
FrechetFailureRow frechet_failure_witness(const GeoTailSequence& x,
                                          std::size_t k);

}  // namespace gateaux
