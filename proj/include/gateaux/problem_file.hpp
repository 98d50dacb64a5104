#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gateaux/measure.hpp"
#include "gateaux/sequences.hpp"

namespace gateaux {

/// Parsed problem description. See README for the JSON schema. Which fields
/// must be present depends on the command consuming the file; the parser
/// only enforces internal consistency (matching atom ids, finite numbers,
/// a convergent tail).
struct ProblemFile {
  std::optional<MeasureSpace> space;
  std::optional<SimpleFunction> f;
  std::optional<SimpleFunction> h;
  std::optional<GeoTailSequence> sequence;
  std::optional<FiniteSupportDirection> sequence_direction;
  std::optional<double> p;
  std::optional<double> zero_tol;
};

ProblemFile load_problem_file(const std::string& path);
ProblemFile parse_problem_text(const std::string& text);

/// Atom ids of f that --zero-tol snapped to exact zero, in atom order.
std::vector<std::string> snap_zeros(const MeasureSpace& space,
                                    SimpleFunction& f, double zero_tol);

}  // namespace gateaux
