#include <doctest.h>

#include <cmath>

#include "gateaux/derivative.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

using namespace gateaux;
using testsupport::DyadicGen;
using testsupport::rel_close;

TEST_CASE("pointwise_quotient") {
  CHECK(rel_close(pointwise_quotient(2.0, 3.0, 0.1), 3.0, 1e-12));
  CHECK(pointwise_quotient(0.0, 5.0, -0.2) == -5.0);
  CHECK_THROWS_AS(pointwise_quotient(1.0, 1.0, 0.0), input_error);
}

TEST_CASE("pointwise_limit and its quotient cross-check") {
  CHECK(pointwise_limit(2.0, -3.0) == DirectionalLimit::two_sided(-3.0));
  CHECK(pointwise_limit(-1.0, 4.0) == DirectionalLimit::two_sided(-4.0));
  CHECK(pointwise_limit(0.0, 4.0) == DirectionalLimit::from_sides(4.0, -4.0));
  CHECK(pointwise_limit(0.0, 0.0) == DirectionalLimit::two_sided(0.0));
  CHECK(pointwise_limit(5.0, 0.0) == DirectionalLimit::two_sided(0.0));

  DyadicGen gen(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const double f = gen.value_with_zeros(10, 64);
    const double h = gen.value_with_zeros(10, 64);
    const DirectionalLimit limit = pointwise_limit(f, h);
    const double t = 1e-3;
    // At t = 1e-3 the quotient has already reached the one-sided limits
    // whenever |f| >= 1/8 or f = 0, which the dyadic grid guarantees.
    CHECK(rel_close(pointwise_quotient(f, h, t), limit.plus(), 1e-12));
    CHECK(rel_close(pointwise_quotient(f, h, -t), limit.minus(), 1e-12));
  }
}

TEST_CASE("sign_stability_radius marks where the quotient becomes exact") {
  CHECK(sign_stability_radius(3.0, -2.0) == Weight::finite(0.75));
  CHECK(sign_stability_radius(3.0, 0.0) == Weight::infinite());
  CHECK(sign_stability_radius(-0.5, 2.0) == Weight::finite(0.125));
  CHECK_THROWS_AS(sign_stability_radius(0.0, 1.0), precondition_error);

  DyadicGen gen(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const double f = gen.nonzero_value(10);
    const double h = gen.nonzero_value(10);
    const double radius = sign_stability_radius(f, h).value();
    // Any power-of-two step below the radius: the quotient is not just
    // close, it is the limit bit for bit (all quantities dyadic).
    double t = 1.0;
    while (t >= radius) t *= 0.5;
    for (int j = 0; j < 6; ++j, t *= 0.5) {
      CHECK(pointwise_quotient(f, h, t) == signum(f) * h);
      CHECK(pointwise_quotient(f, h, -t) == signum(f) * h);
    }
  }
}

TEST_CASE("gateaux_derivative on worked instances") {
  const MeasureSpace space = MeasureSpace::from_weights({1.0, 2.0, 0.5});
  const SimpleFunction f({3.0, -1.0, 2.0});
  const SimpleFunction h({1.0, 1.0, -2.0});
  CHECK(gateaux_derivative(space, f, h) == -2.0);

  // Along f itself the derivative returns the norm.
  CHECK(gateaux_derivative(space, f, f) == l1_norm(space, f));

  // Differentiable despite an infinite atom: f nonzero a.e., h integrable.
  const MeasureSpace with_inf({"a", "b"},
                              {Weight::finite(1.0), Weight::infinite()});
  CHECK(gateaux_derivative(with_inf, SimpleFunction({2.0, 0.0}),
                           SimpleFunction({5.0, 0.0})) == 5.0);

  CHECK_THROWS_AS(gateaux_derivative(space, SimpleFunction({3.0, 0.0, 2.0}),
                                     h),
                  precondition_error);
  CHECK_THROWS_AS(gateaux_derivative(with_inf, SimpleFunction({2.0, 1.0}),
                                     SimpleFunction({1.0, 0.0})),
                  input_error);
  CHECK_THROWS_AS(gateaux_derivative(with_inf, SimpleFunction({2.0, 0.0}),
                                     SimpleFunction({1.0, 1.0})),
                  input_error);
}

TEST_CASE("directional_derivatives splits base and gap") {
  const MeasureSpace space = MeasureSpace::from_weights({1.0, 0.7});
  const SimpleFunction f({2.0, 0.0});
  const SimpleFunction witness({0.0, 1.0});
  CHECK(directional_derivatives(space, f, witness) ==
        DirectionalLimit::from_sides(0.7, -0.7));

  const MeasureSpace unit = MeasureSpace::from_weights({1.0, 1.0});
  CHECK(directional_derivatives(unit, SimpleFunction({1.0, 0.0}),
                                SimpleFunction({2.0, 3.0})) ==
        DirectionalLimit::from_sides(5.0, -1.0));

  // No zeros: collapses to the two-sided derivative.
  const MeasureSpace s3 = MeasureSpace::from_weights({1.0, 2.0, 0.5});
  const SimpleFunction g({3.0, -1.0, 2.0});
  const SimpleFunction h({1.0, 1.0, -2.0});
  const DirectionalLimit limit = directional_derivatives(s3, g, h);
  CHECK(limit.is_two_sided());
  CHECK(limit.value() == gateaux_derivative(s3, g, h));
}

TEST_CASE("classify on worked instances") {
  const MeasureSpace space = MeasureSpace::from_weights({1.0, 0.7});
  const ClassifyReport kink = classify(space, SimpleFunction({2.0, 0.0}));
  CHECK_FALSE(kink.differentiable);
  CHECK_FALSE(kink.in_g);
  CHECK(kink.a1_holds);
  CHECK(kink.zero_atoms == AtomSet({1}));
  CHECK(kink.zero_measure == Weight::finite(0.7));
  REQUIRE(kink.witness.has_value());
  CHECK(*kink.witness == SimpleFunction({0.0, 1.0}));

  const ClassifyReport smooth = classify(space, SimpleFunction({2.0, -1.0}));
  CHECK(smooth.differentiable);
  CHECK(smooth.in_g);
  CHECK(smooth.zero_atoms.empty());
  CHECK_FALSE(smooth.witness.has_value());

  // Zero on an infinite atom: not in G, yet differentiable, because no
  // integrable direction can see that zero.
  const MeasureSpace with_inf({"a", "b"},
                              {Weight::finite(1.0), Weight::infinite()});
  const ClassifyReport edge = classify(with_inf, SimpleFunction({2.0, 0.0}));
  CHECK(edge.differentiable);
  CHECK_FALSE(edge.in_g);
  CHECK_FALSE(edge.a1_holds);
  CHECK(edge.zero_atoms == AtomSet({1}));
  CHECK(edge.zero_measure == Weight::infinite());
  CHECK_FALSE(edge.witness.has_value());
}

TEST_CASE("witness_direction exists exactly at kinks") {
  const MeasureSpace space = MeasureSpace::from_weights({1.0, 0.0, 0.7});
  // The null atom's zero does not qualify; the witness picks atom c.
  CHECK(witness_direction(space, SimpleFunction({2.0, 0.0, 0.0})) ==
        SimpleFunction({0.0, 0.0, 1.0}));
  CHECK_THROWS_AS(witness_direction(space, SimpleFunction({2.0, 0.0, 1.0})),
                  precondition_error);
}

TEST_CASE("derivative_functional represents the derivative") {
  const MeasureSpace space = MeasureSpace::from_weights({1.0, 2.0, 0.5});
  const SimpleFunction f({3.0, -1.0, 2.0});
  const DualElement deriv = derivative_functional(space, f);
  CHECK(deriv.density() == SimpleFunction({1.0, -1.0, 1.0}));
  CHECK(deriv.operator_norm() == 1.0);

  const SimpleFunction h({1.0, 1.0, -2.0});
  CHECK(deriv.evaluate(h) == gateaux_derivative(space, f, h));

  // The bound |D(h)| <= ||h||_1 is attained along the density itself.
  CHECK(deriv.evaluate(deriv.density()) ==
        l1_norm(space, deriv.density()));

  CHECK_THROWS_AS(derivative_functional(space,
                                        SimpleFunction({3.0, 0.0, 2.0})),
                  precondition_error);
  CHECK_THROWS_AS(DualElement(space, SimpleFunction({0.5, 0.0, 1.0})),
                  input_error);
}

TEST_CASE("derivative is blind to changes on null atoms") {
  DyadicGen gen(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + gen.uniform_index(8);
    std::vector<double> weights(n);
    for (double& w : weights) {
      w = gen.uniform_index(3) == 0 ? 0.0 : gen.positive_value(8);
    }
    const MeasureSpace space = MeasureSpace::from_weights(weights);
    SimpleFunction f = gen.nonvanishing_function(n, 10);
    const SimpleFunction h = gen.function_with_zeros(n, 10);

    std::vector<double> altered = f.values();
    for (std::size_t i = 0; i < n; ++i) {
      if (weights[i] == 0.0) altered[i] = gen.value(10);
    }
    const SimpleFunction g(altered);
    // Representatives of the same a.e. class mostly stay differentiable,
    // but a null-atom value may have become zero; both stay classifiable.
    CHECK(classify(space, f).differentiable ==
          classify(space, g).differentiable);
    if (classify(space, f).differentiable) {
      CHECK(gateaux_derivative(space, f, h) ==
            gateaux_derivative(space, g, h));
    }
  }
}

TEST_CASE("derivative properties: linearity, bound, homogeneity") {
  DyadicGen gen(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const MeasureSpace space = gen.space(1, 16);
    const std::size_t n = space.size();
    const SimpleFunction f = gen.nonvanishing_function(n, 10);
    const SimpleFunction h1 = gen.function_with_zeros(n, 10);
    const SimpleFunction h2 = gen.function_with_zeros(n, 10);
    const double a = gen.value(4);
    const double b = gen.value(4);

    // Linearity, exact on the dyadic grid.
    const SimpleFunction combo =
        add_scaled(scaled(a, h1), b, h2);
    CHECK(rel_close(gateaux_derivative(space, f, combo),
                    a * gateaux_derivative(space, f, h1) +
                        b * gateaux_derivative(space, f, h2),
                    1e-12));

    // |D(h)| <= ||h||_1.
    CHECK(std::abs(gateaux_derivative(space, f, h1)) <=
          l1_norm(space, h1) + 1e-12);

    // D(f) = ||f||_1.
    CHECK(gateaux_derivative(space, f, f) == l1_norm(space, f));

    // Density only depends on signs: positive scaling changes nothing.
    const DualElement d1 = derivative_functional(space, f);
    const DualElement d2 =
        derivative_functional(space, scaled(0.25, f));
    CHECK(d1.density() == d2.density());
  }
}

TEST_CASE("subgradient inequality and convexity of one-sided limits") {
  DyadicGen gen(25);
  for (int trial = 0; trial < 1000; ++trial) {
    const MeasureSpace space = gen.space(1, 16);
    const std::size_t n = space.size();
    const SimpleFunction f = gen.function_with_zeros(n, 10);
    const SimpleFunction g = gen.function_with_zeros(n, 10);
    const SimpleFunction h = gen.function_with_zeros(n, 10);

    const DirectionalLimit sides = directional_derivatives(space, f, h);
    CHECK(sides.plus() >= sides.minus());

    // Convexity: difference quotients grow with t, so the quotient at
    // t = 1 dominates the right derivative along g - f.
    const SimpleFunction diff = add_scaled(g, -1.0, f);
    const DirectionalLimit along = directional_derivatives(space, f, diff);
    CHECK(l1_norm(space, g) - l1_norm(space, f) >= along.plus() - 1e-12);

    // At differentiable points that is the subgradient inequality for the
    // derivative itself.
    const SimpleFunction smooth = gen.nonvanishing_function(n, 10);
    const SimpleFunction to_g = add_scaled(g, -1.0, smooth);
    CHECK(l1_norm(space, g) - l1_norm(space, smooth) >=
          gateaux_derivative(space, smooth, to_g) - 1e-12);
  }
}

TEST_CASE("differentiable exactly when nonzero on finite-positive atoms") {
  // Exhaustive over tiny spaces: weights in {0, 1/2, 1}, values in
  // {-1, 0, 1}, up to 4 atoms. Counts every combination once.
  const double weight_choices[] = {0.0, 0.5, 1.0};
  const double value_choices[] = {-1.0, 0.0, 1.0};
  long cases = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<std::size_t> digits(n, 0);
    const std::size_t total = [n] {
      std::size_t t = 1;
      for (std::size_t i = 0; i < 2 * n; ++i) t *= 3;
      return t;
    }();
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      std::vector<double> weights(n), values(n);
      for (std::size_t i = 0; i < n; ++i) {
        weights[i] = weight_choices[rest % 3];
        rest /= 3;
        values[i] = value_choices[rest % 3];
        rest /= 3;
      }
      const MeasureSpace space = MeasureSpace::from_weights(weights);
      const SimpleFunction f(values);
      const ClassifyReport report = classify(space, f);
      // All weights finite here, so differentiable == in G.
      CHECK(report.differentiable == report.in_g);
      CHECK(report.differentiable == in_class_g(space, f));
      ++cases;
    }
  }
  CHECK(cases == 7381);
}
