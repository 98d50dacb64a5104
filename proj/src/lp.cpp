#include "gateaux/lp.hpp"

#include <cmath>

namespace gateaux {

PExponent::PExponent(double p) : p_(p) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw input_error("exponent p must satisfy 1 < p < infinity");
  }
}

namespace {

void require_vanishes_on_infinite(const MeasureSpace& space,
                                  const SimpleFunction& f,
                                  const char* name) {
  if (f.size() != space.size()) {
    throw input_error("function does not match the space");
  }
  if (!is_integrable(space, f)) {
    throw precondition_error(std::string(name) +
                             " must vanish on infinite atoms");
  }
}

}  // namespace

double lp_norm(const MeasureSpace& space, const SimpleFunction& f,
               const PExponent& p) {
  require_vanishes_on_infinite(space, f, "f");
  double total = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.weight(i).is_infinite()) continue;
    total += space.weight(i).value() * std::pow(std::abs(f[i]), p.p());
  }
  return std::pow(total, 1.0 / p.p());
}

LpFunctional::LpFunctional(const MeasureSpace& space, SimpleFunction density,
                           PExponent p)
    : space_(space), density_(std::move(density)), p_(p) {
  if (density_.size() != space_.size()) {
    throw input_error("density does not match the space");
  }
}

double LpFunctional::evaluate(const SimpleFunction& h) const {
  require_vanishes_on_infinite(space_, h, "h");
  double total = 0.0;
  for (std::size_t i = 0; i < space_.size(); ++i) {
    if (space_.weight(i).is_infinite()) continue;
    total += space_.weight(i).value() * density_[i] * h[i];
  }
  return total;
}

LpFunctional lp_frechet_derivative(const MeasureSpace& space,
                                   const SimpleFunction& f,
                                   const PExponent& p) {
  const double norm = lp_norm(space, f, p);
  if (norm == 0.0) {
    throw precondition_error(
        "p-norm derivative undefined at f = 0 almost everywhere");
  }
  const double scale = std::pow(norm, p.p() - 1.0);
  std::vector<double> density(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (f[i] == 0.0) {
      density[i] = 0.0;  // pow(0, p-1) with 1 < p, but keep the sign clean
    } else {
      density[i] =
          std::pow(std::abs(f[i]), p.p() - 1.0) * signum(f[i]) / scale;
    }
  }
  return LpFunctional(space, SimpleFunction(std::move(density)), p);
}

double lp_remainder_ratio(const MeasureSpace& space, const SimpleFunction& f,
                          const PExponent& p, const SimpleFunction& h) {
  const double h_norm = lp_norm(space, h, p);
  if (h_norm == 0.0) {
    throw input_error("remainder ratio needs a nonzero perturbation");
  }
  const LpFunctional deriv = lp_frechet_derivative(space, f, p);
  const double lhs = lp_norm(space, add_scaled(f, 1.0, h), p) -
                     lp_norm(space, f, p) - deriv.evaluate(h);
  return std::abs(lhs) / h_norm;
}

}  // namespace gateaux
