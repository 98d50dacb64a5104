#pragma once

#include <string>

#include <json.hpp>

namespace gateaux {

/// Shortest decimal form that round-trips the double exactly (%.17g).
std::string format_real(double x);

/// Pretty-prints with two-space indentation, keys in insertion order, and
/// every floating-point number rendered with format_real. nlohmann's own
/// dump() trims digits, which breaks byte-exact golden comparisons; this
/// writer is the single formatting path for all CLI JSON output.
std::string dump_json17(const nlohmann::ordered_json& j);

}  // namespace gateaux
