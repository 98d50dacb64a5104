#include "gateaux/verify.hpp"

#include <cmath>

namespace gateaux {

double fd_quotient(const MeasureSpace& space, const SimpleFunction& f,
                   const SimpleFunction& h, double t) {
  if (t == 0.0) throw input_error("quotient step t must be nonzero");
  if (!is_integrable(space, f) || !is_integrable(space, h)) {
    throw input_error("f and h must be integrable on this space");
  }
  return (l1_norm(space, add_scaled(f, t, h)) - l1_norm(space, f)) / t;
}

namespace {

void validate_schedule(const FDSchedule& s) {
  if (!(s.t0 > 0.0) || !std::isfinite(s.t0)) {
    throw input_error("schedule t0 must be a positive finite step");
  }
  if (!(s.shrink > 0.0) || !(s.shrink < 1.0)) {
    throw input_error("schedule shrink must lie in (0, 1)");
  }
  if (s.steps < 1) throw input_error("schedule needs at least one step");
  if (s.t0 * std::pow(s.shrink, s.steps) <= 1e-300) {
    throw input_error("schedule steps shrink below representable range");
  }
}

bool plateau(const std::vector<double>& q, int j, double tol) {
  return std::abs(q[j] - q[j - 1]) <= tol &&
         std::abs(q[j - 1] - q[j - 2]) <= tol;
}

}  // namespace

FDReport fd_directional(const MeasureSpace& space, const SimpleFunction& f,
                        const SimpleFunction& h, const FDSchedule& schedule,
                        double tol) {
  validate_schedule(schedule);
  if (!(tol >= 0.0)) throw input_error("tolerance must be >= 0");
  if (!is_integrable(space, f) || !is_integrable(space, h)) {
    throw input_error("f and h must be integrable on this space");
  }

  FDReport report;
  double t = schedule.t0;
  for (int j = 0; j < schedule.steps; ++j) {
    report.plus_quotients.push_back(fd_quotient(space, f, h, t));
    report.minus_quotients.push_back(fd_quotient(space, f, h, -t));
    t *= schedule.shrink;
  }
  report.plus_estimate = report.plus_quotients.back();
  report.minus_estimate = report.minus_quotients.back();

  for (int j = 2; j < schedule.steps; ++j) {
    if (plateau(report.plus_quotients, j, tol) &&
        plateau(report.minus_quotients, j, tol)) {
      report.stabilization_step = j;
      break;
    }
  }
  report.stabilized = report.stabilization_step.has_value();

  const DirectionalLimit closed = directional_derivatives(space, f, h);
  report.closed_plus = closed.plus();
  report.closed_minus = closed.minus();
  if (closed.is_two_sided()) report.closed_form = closed.value();
  report.max_deviation =
      std::max(std::abs(report.plus_estimate - report.closed_plus),
               std::abs(report.minus_estimate - report.closed_minus));
  return report;
}

}  // namespace gateaux
