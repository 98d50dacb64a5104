#pragma once

#include <optional>
#include <vector>

#include "gateaux/derivative.hpp"

namespace gateaux {

/// Geometric step schedule for finite differences: t_j = t0 * shrink^j for
/// j = 0 .. steps-1.
struct FDSchedule {
  double t0 = 1e-2;
  double shrink = 0.5;
  int steps = 20;
};

/// (phi(f + t*h) - phi(f)) / t for the integral-of-|.| functional.
/// t must be nonzero and both functions integrable.
double fd_quotient(const MeasureSpace& space, const SimpleFunction& f,
                   const SimpleFunction& h, double t);

/// Finite-difference sweep along +h and -h compared against the closed-form
/// one-sided derivatives.
struct FDReport {
  /// Quotients at each step of the schedule, from t0 down.
  std::vector<double> plus_quotients;
  std::vector<double> minus_quotients;
  /// Quotients at the smallest step.
  double plus_estimate = 0.0;
  double minus_estimate = 0.0;
  /// First step index at which the last three quotients on each side agree
  /// within the tolerance; absent when that never happens.
  std::optional<int> stabilization_step;
  bool stabilized = false;
  /// Closed-form one-sided derivatives the sweep is checked against.
  double closed_plus = 0.0;
  double closed_minus = 0.0;
  /// The two-sided value, present when the sides coincide.
  std::optional<double> closed_form;
  /// max(|plus_estimate - closed_plus|, |minus_estimate - closed_minus|).
  double max_deviation = 0.0;
};

/// Runs the schedule on both sides. The quotient along -h at step t is
/// phi(f - t*h) ... / (-t), so for small t the two estimates bracket a kink:
/// at differentiable points they meet, at a kink they stay gap apart.
FDReport fd_directional(const MeasureSpace& space, const SimpleFunction& f,
                        const SimpleFunction& h, const FDSchedule& schedule,
                        double tol);

}  // namespace gateaux
