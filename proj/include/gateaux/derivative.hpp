#pragma once

#include <optional>

#include "gateaux/measure.hpp"

namespace gateaux {

/// Limit of difference quotients along a direction. Either the two one-sided
/// limits agree (a two-sided limit, the directional derivative) or they
/// differ and only the pair is reported.
class DirectionalLimit {
 public:
  static DirectionalLimit two_sided(double value);

  /// Normalizes: equal sides collapse to a two-sided limit.
  static DirectionalLimit from_sides(double plus, double minus);

  bool is_two_sided() const { return two_sided_; }

  /// The common limit. Requires is_two_sided().
  double value() const;

  double plus() const { return plus_; }
  double minus() const { return minus_; }
  double gap() const { return plus_ - minus_; }

  bool operator==(const DirectionalLimit& other) const;

 private:
  DirectionalLimit(double p, double m, bool ts)
      : plus_(p), minus_(m), two_sided_(ts) {}
  double plus_ = 0.0;
  double minus_ = 0.0;
  bool two_sided_ = false;
};

/// (|f_x + t*h_x| - |f_x|) / t for scalar arguments. t must be nonzero.
double pointwise_quotient(double f_x, double h_x, double t);

/// Exact t -> 0 limit of the scalar quotient: sign(f_x)*h_x when f_x != 0,
/// the pair (+|h_x|, -|h_x|) when f_x = 0 and h_x != 0, and 0 when h_x = 0.
DirectionalLimit pointwise_limit(double f_x, double h_x);

/// Largest step scale at which the scalar quotient is already exact:
/// for every |t| below the returned radius, f_x + t*h_x has the sign of f_x,
/// so pointwise_quotient(f_x, h_x, t) equals sign(f_x)*h_x. Requires
/// f_x != 0; infinite when h_x = 0.
Weight sign_stability_radius(double f_x, double h_x);

/// The derivative of the integral-of-|.| functional at f, applied to h:
/// the integral of sign(f)*h. Requires f and h integrable (input error) and
/// the functional differentiable at f (precondition error; the one-sided
/// values are still available through directional_derivatives).
double gateaux_derivative(const MeasureSpace& space, const SimpleFunction& f,
                          const SimpleFunction& h);

/// One-sided derivatives of the integral-of-|.| functional at f along h,
/// defined at every integrable f. Writing base for the integral of
/// sign(f)*h over the support of f and gap for the integral of |h| over the
/// zero set of f, the sides are base + gap and base - gap; they coincide
/// exactly when the gap vanishes.
DirectionalLimit directional_derivatives(const MeasureSpace& space,
                                         const SimpleFunction& f,
                                         const SimpleFunction& h);

/// The derivative as an element of the dual space: integration against a
/// fixed density with values in {-1, 0, 1}.
class DualElement {
 public:
  DualElement(const MeasureSpace& space, SimpleFunction density);

  const SimpleFunction& density() const { return density_; }

  /// Integral of density*h. Requires h integrable on the same space.
  double evaluate(const SimpleFunction& h) const;

  /// Dual (operator) norm: the essential sup of |density|, i.e. the largest
  /// |density| over atoms of positive weight. Zero when no such atom exists.
  double operator_norm() const;

 private:
  MeasureSpace space_;
  SimpleFunction density_;
};

/// Differentiability analysis of the integral-of-|.| functional at f.
struct ClassifyReport {
  bool differentiable = false;
  bool in_g = false;
  bool a1_holds = false;
  AtomSet zero_atoms;
  Weight zero_measure = Weight::finite(0.0);
  /// Indicator of a single finite-positive atom in the zero set; present
  /// exactly when the functional is not differentiable at f.
  std::optional<SimpleFunction> witness;
};

/// Classifies f: the functional is differentiable at f exactly when the zero
/// set of f contains no atom of finite positive weight. Requires f
/// integrable.
ClassifyReport classify(const MeasureSpace& space, const SimpleFunction& f);

/// The indicator direction along which the one-sided derivatives split.
/// Requires a non-differentiable point (precondition error otherwise).
SimpleFunction witness_direction(const MeasureSpace& space,
                                 const SimpleFunction& f);

/// The derivative at a differentiable point as a dual element with density
/// sign(f). Requires a differentiable point.
DualElement derivative_functional(const MeasureSpace& space,
                                  const SimpleFunction& f);

}  // namespace gateaux
