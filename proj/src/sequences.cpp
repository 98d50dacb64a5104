#include "gateaux/sequences.hpp"

#include <cmath>
#include <iterator>

namespace gateaux {

GeoTailSequence::GeoTailSequence(std::vector<double> prefix,
                                 double tail_coeff, double tail_ratio)
    : prefix_(std::move(prefix)),
      tail_coeff_(tail_coeff),
      tail_ratio_(tail_ratio) {
  for (double v : prefix_) {
    if (!std::isfinite(v)) throw input_error("prefix values must be finite");
  }
  if (!std::isfinite(tail_coeff_)) {
    throw input_error("tail coefficient must be finite");
  }
  if (!std::isfinite(tail_ratio_) || std::abs(tail_ratio_) >= 1.0) {
    throw input_error("tail ratio must satisfy |r| < 1");
  }
}

double GeoTailSequence::coordinate(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  const auto k = static_cast<double>(n - prefix_.size());
  if (tail_coeff_ == 0.0) return 0.0;
  return tail_coeff_ * std::pow(tail_ratio_, k);
}

FiniteSupportDirection::FiniteSupportDirection(
    std::map<std::size_t, double> entries)
    : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (!std::isfinite(it->second)) {
      throw input_error("direction values must be finite");
    }
    it = it->second == 0.0 ? entries_.erase(it) : std::next(it);
  }
}

double FiniteSupportDirection::l1_norm() const {
  double total = 0.0;
  for (const auto& [n, v] : entries_) total += std::abs(v);
  return total;
}

double seq_l1_norm(const GeoTailSequence& x) {
  double total = 0.0;
  for (double v : x.prefix()) total += std::abs(v);
  total += std::abs(x.tail_coeff()) / (1.0 - std::abs(x.tail_ratio()));
  return total;
}

bool seq_in_g(const GeoTailSequence& x) {
  for (double v : x.prefix()) {
    if (v == 0.0) return false;
  }
  return x.tail_coeff() != 0.0 && x.tail_ratio() != 0.0;
}

double seq_gateaux(const GeoTailSequence& x,
                   const FiniteSupportDirection& h) {
  if (!seq_in_g(x)) {
    throw precondition_error(
        "sequence has a zero coordinate; seq_classify reports the "
        "one-sided values there");
  }
  double total = 0.0;
  for (const auto& [n, v] : h.entries()) {
    total += signum(x.coordinate(n)) * v;
  }
  return total;
}

namespace {

// Smallest n with x_n = 0, if any. The prefix is scanned directly; past it
// a zero tail coefficient zeroes every coordinate after the first tail term
// when r = 0, and the whole tail when a = 0.
std::optional<std::size_t> first_zero_index(const GeoTailSequence& x) {
  for (std::size_t n = 0; n < x.prefix().size(); ++n) {
    if (x.prefix()[n] == 0.0) return n;
  }
  if (x.tail_coeff() == 0.0) return x.tail_start();
  if (x.tail_ratio() == 0.0) return x.tail_start() + 1;
  return std::nullopt;
}

}  // namespace

SeqClassifyReport seq_classify(const GeoTailSequence& x) {
  SeqClassifyReport report;
  const auto zero = first_zero_index(x);
  report.differentiable = !zero.has_value();
  if (zero) {
    report.witness_index = *zero;
    // Along e_k at a zero coordinate the quotient is +-1: the counting
    // measure of a single index.
    report.one_sided = DirectionalLimit::from_sides(1.0, -1.0);
  }
  return report;
}

double seq_norm_delta(const GeoTailSequence& x,
                      const FiniteSupportDirection& h) {
  double total = 0.0;
  for (const auto& [n, v] : h.entries()) {
    const double xn = x.coordinate(n);
    total += std::abs(xn + v) - std::abs(xn);
  }
  return total;
}

double seq_remainder_ratio(const GeoTailSequence& x,
                           const FiniteSupportDirection& h) {
  const double norm = h.l1_norm();
  if (norm == 0.0) {
    throw input_error("remainder ratio needs a nonzero direction");
  }
  const double linear = seq_gateaux(x, h);
  return std::abs(seq_norm_delta(x, h) - linear) / norm;
}

FrechetFailureRow frechet_failure_witness(const GeoTailSequence& x,
                                          std::size_t k) {
  if (k == 0) throw input_error("tail offset k must be positive");
  if (!seq_in_g(x)) {
    throw precondition_error(
        "sign-flip witness needs a sequence with all coordinates nonzero");
  }
  const std::size_t m = x.tail_start() + k;
  const double xm = x.coordinate(m);
  if (xm == 0.0) {
    throw precondition_error("tail coordinate underflowed to zero");
  }
  FrechetFailureRow row;
  row.k = k;
  row.index = m;
  row.direction_value = -2.0 * xm;
  FiniteSupportDirection h({{m, row.direction_value}});
  row.direction_norm = h.l1_norm();
  row.ratio = seq_remainder_ratio(x, h);
  return row;
}

}  // namespace gateaux
