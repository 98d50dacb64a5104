#include "gateaux/derivative.hpp"

#include <cmath>

namespace gateaux {

DirectionalLimit DirectionalLimit::two_sided(double value) {
  return DirectionalLimit(value, value, true);
}

DirectionalLimit DirectionalLimit::from_sides(double plus, double minus) {
  if (plus == minus) return two_sided(plus);
  return DirectionalLimit(plus, minus, false);
}

double DirectionalLimit::value() const {
  if (!two_sided_) {
    throw precondition_error("one-sided limits differ; no two-sided value");
  }
  return plus_;
}

bool DirectionalLimit::operator==(const DirectionalLimit& other) const {
  return two_sided_ == other.two_sided_ && plus_ == other.plus_ &&
         minus_ == other.minus_;
}

double pointwise_quotient(double f_x, double h_x, double t) {
  if (t == 0.0) throw input_error("quotient step t must be nonzero");
  return (std::abs(f_x + t * h_x) - std::abs(f_x)) / t;
}

DirectionalLimit pointwise_limit(double f_x, double h_x) {
  if (h_x == 0.0) return DirectionalLimit::two_sided(0.0);
  if (f_x != 0.0) {
    return DirectionalLimit::two_sided(signum(f_x) * h_x);
  }
  return DirectionalLimit::from_sides(std::abs(h_x), -std::abs(h_x));
}

Weight sign_stability_radius(double f_x, double h_x) {
  if (f_x == 0.0) {
    throw precondition_error("no stability radius at f_x = 0");
  }
  if (h_x == 0.0) return Weight::infinite();
  return Weight::finite(std::abs(f_x) / (2.0 * std::abs(h_x)));
}

namespace {

void require_integrable_pair(const MeasureSpace& space,
                             const SimpleFunction& f,
                             const SimpleFunction& h) {
  if (!is_integrable(space, f)) {
    throw input_error("f is not integrable on this space");
  }
  if (!is_integrable(space, h)) {
    throw input_error("direction h is not integrable on this space");
  }
}

}  // namespace

double gateaux_derivative(const MeasureSpace& space, const SimpleFunction& f,
                          const SimpleFunction& h) {
  require_integrable_pair(space, f, h);
  const ClassifyReport report = classify(space, f);
  if (!report.differentiable) {
    throw precondition_error(
        "norm is not differentiable at f; the one-sided values are "
        "available through directional_derivatives");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.weight(i).is_infinite()) continue;  // h is 0 there
    total += space.weight(i).value() * signum(f[i]) * h[i];
  }
  return total;
}

DirectionalLimit directional_derivatives(const MeasureSpace& space,
                                         const SimpleFunction& f,
                                         const SimpleFunction& h) {
  require_integrable_pair(space, f, h);
  // base: contribution of the support of f, the same on both sides.
  // gap: integral of |h| over the zero set, + on one side, - on the other.
  double base = 0.0;
  double gap = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Weight& w = space.weight(i);
    if (w.is_infinite()) continue;
    if (f[i] != 0.0) {
      base += w.value() * signum(f[i]) * h[i];
    } else if (w.value() > 0.0) {
      gap += w.value() * std::abs(h[i]);
    }
  }
  if (gap == 0.0) return DirectionalLimit::two_sided(base);
  return DirectionalLimit::from_sides(base + gap, base - gap);
}

DualElement::DualElement(const MeasureSpace& space, SimpleFunction density)
    : space_(space), density_(std::move(density)) {
  if (density_.size() != space_.size()) {
    throw input_error("density does not match the space");
  }
  for (std::size_t i = 0; i < density_.size(); ++i) {
    const double d = density_[i];
    if (d != -1.0 && d != 0.0 && d != 1.0) {
      throw input_error("dual density values must be -1, 0 or 1");
    }
  }
}

double DualElement::evaluate(const SimpleFunction& h) const {
  if (!is_integrable(space_, h)) {
    throw input_error("direction h is not integrable on this space");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < space_.size(); ++i) {
    if (space_.weight(i).is_infinite()) continue;
    total += space_.weight(i).value() * density_[i] * h[i];
  }
  return total;
}

double DualElement::operator_norm() const {
  double sup = 0.0;
  for (std::size_t i = 0; i < space_.size(); ++i) {
    if (space_.weight(i).is_positive()) {
      sup = std::max(sup, std::abs(density_[i]));
    }
  }
  return sup;
}

ClassifyReport classify(const MeasureSpace& space, const SimpleFunction& f) {
  if (!is_integrable(space, f)) {
    throw input_error("f is not integrable on this space");
  }
  ClassifyReport report;
  report.zero_atoms = zero_set(space, f);
  report.zero_measure = measure_of(space, report.zero_atoms);
  report.in_g = in_class_g(space, f);
  report.a1_holds = check_a1(space);
  // A kink needs a zero atom that carries finite positive weight: along its
  // indicator the quotient picks up +-(that weight). Zeros sitting only on
  // infinite atoms admit no integrable direction that sees them.
  const auto kink_atom = finite_positive_subset(space, report.zero_atoms);
  report.differentiable = !kink_atom.has_value();
  if (kink_atom) {
    report.witness = indicator(space.size(), *kink_atom);
  }
  return report;
}

SimpleFunction witness_direction(const MeasureSpace& space,
                                 const SimpleFunction& f) {
  const ClassifyReport report = classify(space, f);
  if (report.differentiable) {
    throw precondition_error(
        "norm is differentiable at f; there is no kink witness");
  }
  return *report.witness;
}

DualElement derivative_functional(const MeasureSpace& space,
                                  const SimpleFunction& f) {
  const ClassifyReport report = classify(space, f);
  if (!report.differentiable) {
    throw precondition_error(
        "norm is not differentiable at f; no dual representation");
  }
  std::vector<double> density(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    density[i] = static_cast<double>(signum(f[i]));
  }
  return DualElement(space, SimpleFunction(std::move(density)));
}

}  // namespace gateaux
