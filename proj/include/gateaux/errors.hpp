#pragma once

#include <stdexcept>
#include <string>

namespace gateaux {

/// Malformed or out-of-domain input: bad file contents, mismatched atom sets,
/// an exponent outside (1, inf), a zero step. Maps to CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of the operation does not hold, e.g. asking for
/// the derivative at a point where the norm has a kink. Maps to CLI exit
/// code 3.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gateaux
