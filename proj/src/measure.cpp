#include "gateaux/measure.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gateaux {

Weight Weight::finite(double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw input_error("finite weight must be a finite value >= 0");
  }
  return Weight(v, false);
}

Weight Weight::infinite() { return Weight(0.0, true); }

double Weight::value() const {
  if (infinite_) {
    throw precondition_error("infinite weight has no finite value");
  }
  return value_;
}

Weight Weight::operator+(const Weight& other) const {
  if (infinite_ || other.infinite_) return infinite();
  return finite(value_ + other.value_);
}

bool Weight::operator==(const Weight& other) const {
  if (infinite_ != other.infinite_) return false;
  return infinite_ || value_ == other.value_;
}

MeasureSpace::MeasureSpace(std::vector<std::string> ids,
                           std::vector<Weight> weights)
    : ids_(std::move(ids)), weights_(std::move(weights)) {
  if (ids_.size() != weights_.size()) {
    throw input_error("measure space needs one id per weight");
  }
  std::set<std::string> seen;
  for (const auto& id : ids_) {
    if (id.empty()) throw input_error("empty atom id");
    if (!seen.insert(id).second) {
      throw input_error("duplicate atom id: " + id);
    }
  }
}

MeasureSpace MeasureSpace::from_weights(const std::vector<double>& weights) {
  std::vector<std::string> ids;
  std::vector<Weight> ws;
  ids.reserve(weights.size());
  ws.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    ids.push_back(std::to_string(i));
    ws.push_back(Weight::finite(weights[i]));
  }
  return MeasureSpace(std::move(ids), std::move(ws));
}

std::optional<std::size_t> MeasureSpace::find(const std::string& id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return i;
  }
  return std::nullopt;
}

AtomSet::AtomSet(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()),
                 indices_.end());
}

bool AtomSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

SimpleFunction::SimpleFunction(std::vector<double> values)
    : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw input_error("function values must be finite");
    }
  }
}

SimpleFunction add_scaled(const SimpleFunction& f, double t,
                          const SimpleFunction& h) {
  if (f.size() != h.size()) {
    throw input_error("functions live on different spaces");
  }
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = f[i] + t * h[i];
  }
  return SimpleFunction(std::move(out));
}

SimpleFunction scaled(double c, const SimpleFunction& f) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = c * f[i];
  return SimpleFunction(std::move(out));
}

SimpleFunction indicator(std::size_t size, const AtomSet& support) {
  std::vector<double> out(size, 0.0);
  for (std::size_t i : support.indices()) {
    if (i >= size) throw input_error("support index out of range");
    out[i] = 1.0;
  }
  return SimpleFunction(std::move(out));
}

namespace {

void require_in_range(const MeasureSpace& space, const AtomSet& set) {
  for (std::size_t i : set.indices()) {
    if (i >= space.size()) {
      throw input_error("atom index out of range for this space");
    }
  }
}

void require_same_space(const MeasureSpace& space, const SimpleFunction& f) {
  if (f.size() != space.size()) {
    throw input_error("function does not match the space");
  }
}

}  // namespace

Weight measure_of(const MeasureSpace& space, const AtomSet& set) {
  require_in_range(space, set);
  Weight total = Weight::finite(0.0);
  for (std::size_t i : set.indices()) {
    total = total + space.weight(i);
  }
  return total;
}

bool check_a1(const MeasureSpace& space) {
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.weight(i).is_infinite()) return false;
  }
  return true;
}

std::optional<AtomSet> finite_positive_subset(const MeasureSpace& space,
                                              const AtomSet& set) {
  require_in_range(space, set);
  for (std::size_t i : set.indices()) {
    if (space.weight(i).is_finite_positive()) {
      return AtomSet({i});
    }
  }
  return std::nullopt;
}

bool is_integrable(const MeasureSpace& space, const SimpleFunction& f) {
  require_same_space(space, f);
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.weight(i).is_infinite() && f[i] != 0.0) return false;
  }
  return true;
}

double l1_norm(const MeasureSpace& space, const SimpleFunction& f) {
  if (!is_integrable(space, f)) {
    throw precondition_error("function is not integrable on this space");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.weight(i).is_infinite()) continue;  // f is 0 there
    total += space.weight(i).value() * std::abs(f[i]);
  }
  return total;
}

bool ae_equal(const MeasureSpace& space, const SimpleFunction& f,
              const SimpleFunction& g) {
  require_same_space(space, f);
  require_same_space(space, g);
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.weight(i).is_positive() && f[i] != g[i]) return false;
  }
  return true;
}

bool in_class_g(const MeasureSpace& space, const SimpleFunction& f) {
  require_same_space(space, f);
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.weight(i).is_positive() && f[i] == 0.0) return false;
  }
  return true;
}

AtomSet zero_set(const MeasureSpace& space, const SimpleFunction& f) {
  require_same_space(space, f);
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.weight(i).is_positive() && f[i] == 0.0) zeros.push_back(i);
  }
  return AtomSet(std::move(zeros));
}

}  // namespace gateaux
