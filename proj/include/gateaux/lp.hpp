#pragma once

#include "gateaux/measure.hpp"

namespace gateaux {

/// An exponent p strictly between 1 and infinity. Values outside that open
/// interval are rejected as input errors.
class PExponent {
 public:
  explicit PExponent(double p);

  double p() const { return p_; }

  /// The conjugate exponent q with 1/p + 1/q = 1.
  double conjugate() const { return p_ / (p_ - 1.0); }

 private:
  double p_ = 2.0;
};

/// The p-norm of f: (integral of |f|^p)^(1/p). Requires f to vanish on
/// every infinite atom (precondition error otherwise).
double lp_norm(const MeasureSpace& space, const SimpleFunction& f,
               const PExponent& p);

/// The derivative of the p-norm at f: integration against the density
/// |f|^(p-1) * sign(f) / ||f||^(p-1).
class LpFunctional {
 public:
  LpFunctional(const MeasureSpace& space, SimpleFunction density,
               PExponent p);

  const SimpleFunction& density() const { return density_; }
  const PExponent& exponent() const { return p_; }

  /// Integral of density*h. h must live on the same space and vanish on
  /// infinite atoms.
  double evaluate(const SimpleFunction& h) const;

 private:
  MeasureSpace space_;
  SimpleFunction density_;
  PExponent p_;
};

/// Derivative of the p-norm at f. Requires ||f|| > 0 (precondition error
/// when f vanishes almost everywhere).
LpFunctional lp_frechet_derivative(const MeasureSpace& space,
                                   const SimpleFunction& f,
                                   const PExponent& p);

/// | ||f+h|| - ||f|| - L(h) | / ||h|| with L the derivative at f. The
/// linear-approximation error per unit of perturbation; it tends to zero
/// with ||h|| exactly because the p-norm is differentiable. Zero h is an
/// input error.
double lp_remainder_ratio(const MeasureSpace& space, const SimpleFunction& f,
                          const PExponent& p, const SimpleFunction& h);

}  // namespace gateaux
