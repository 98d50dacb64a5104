#pragma once

#include <cmath>

namespace testsupport {

// |a - b| <= tol * max(1, |b|). The floor keeps the comparison meaningful
// when the reference value sits near zero.
inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

inline bool abs_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace testsupport
