#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gateaux/errors.hpp"

namespace gateaux {

/// Sign with sign(0) = 0. Returned as an int so it can be compared exactly.
inline int signum(double x) {
  if (x > 0.0) return 1;
  if (x < 0.0) return -1;
  return 0;
}

/// Weight of a single atom: a finite value >= 0, or infinite. Addition
/// absorbs into infinity.
class Weight {
 public:
  static Weight finite(double v);
  static Weight infinite();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Finite value. Calling this on an infinite weight is a logic error.
  double value() const;

  bool is_positive() const { return infinite_ || value_ > 0.0; }
  bool is_finite_positive() const { return !infinite_ && value_ > 0.0; }

  Weight operator+(const Weight& other) const;
  bool operator==(const Weight& other) const;

 private:
  Weight(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_ = 0.0;
  bool infinite_ = false;
};

/// A finite measure space given by an ordered list of named atoms. Atoms of
/// weight zero model null sets; infinite atoms model pieces of infinite
/// measure that contain no smaller set of finite positive measure.
class MeasureSpace {
 public:
  MeasureSpace() = default;
  MeasureSpace(std::vector<std::string> ids, std::vector<Weight> weights);

  /// Atoms named "0", "1", ... with the given finite weights.
  static MeasureSpace from_weights(const std::vector<double>& weights);

  std::size_t size() const { return weights_.size(); }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  const Weight& weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }

  /// Index of the atom with this id, if present.
  std::optional<std::size_t> find(const std::string& id) const;

 private:
  std::vector<std::string> ids_;
  std::vector<Weight> weights_;
};

/// A set of atoms, kept sorted by index.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::vector<std::size_t> indices);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t index) const;
  const std::vector<std::size_t>& indices() const { return indices_; }

  bool operator==(const AtomSet& other) const {
    return indices_ == other.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
};

/// A measurable function on an atomic space: one finite real value per atom,
/// in atom order. NaN and infinities are rejected.
class SimpleFunction {
 public:
  SimpleFunction() = default;
  explicit SimpleFunction(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const SimpleFunction& other) const {
    return values_ == other.values_;
  }

 private:
  std::vector<double> values_;
};

/// f + t*h, validated to stay finite.
SimpleFunction add_scaled(const SimpleFunction& f, double t,
                          const SimpleFunction& h);

/// c*f.
SimpleFunction scaled(double c, const SimpleFunction& f);

/// Indicator function of `support` on a space with `size` atoms.
SimpleFunction indicator(std::size_t size, const AtomSet& support);

/// Total weight of the atoms in `set`. Infinite if any member is infinite.
/// Unknown indices are an input error; the empty set has measure zero.
Weight measure_of(const MeasureSpace& space, const AtomSet& set);

/// Whether every infinite-weight piece of the space contains a subset of
/// finite positive measure. For atomic spaces this holds exactly when no
/// atom is infinite: an infinite atom is indivisible, so nothing smaller
/// than the whole atom is available inside it.
bool check_a1(const MeasureSpace& space);

/// A single atom of finite positive weight inside `set`, lowest index first,
/// or nullopt when `set` has none.
std::optional<AtomSet> finite_positive_subset(const MeasureSpace& space,
                                              const AtomSet& set);

/// Whether f vanishes identically on every infinite atom, i.e. whether the
/// integral of |f| is finite.
bool is_integrable(const MeasureSpace& space, const SimpleFunction& f);

/// Integral of |f|. Requires f integrable (precondition error otherwise).
double l1_norm(const MeasureSpace& space, const SimpleFunction& f);

/// Equality up to null sets: f and g agree on every atom of positive weight.
bool ae_equal(const MeasureSpace& space, const SimpleFunction& f,
              const SimpleFunction& g);

/// Whether f is nonzero almost everywhere: no zero at any positive-weight
/// atom, infinite atoms included.
bool in_class_g(const MeasureSpace& space, const SimpleFunction& f);

/// The positive-weight atoms where f vanishes.
AtomSet zero_set(const MeasureSpace& space, const SimpleFunction& f);

}  // namespace gateaux
