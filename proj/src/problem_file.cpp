#include "gateaux/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace gateaux {

namespace {

using nlohmann::json;

double number_field(const json& j, const std::string& where) {
  if (!j.is_number()) throw input_error(where + " must be a number");
  return j.get<double>();
}

Weight weight_field(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Weight::infinite();
    throw input_error("atom weight must be a number or \"inf\"");
  }
  return Weight::finite(number_field(j, "atom weight"));
}

MeasureSpace parse_space(const json& j) {
  if (!j.is_array()) {
    throw input_error("space must be an array of {id, weight} atoms");
  }
  std::vector<std::string> ids;
  std::vector<Weight> weights;
  for (const auto& atom : j) {
    if (!atom.is_object() || !atom.contains("id") ||
        !atom.contains("weight")) {
      throw input_error("each atom needs an id and a weight");
    }
    if (!atom["id"].is_string()) throw input_error("atom id must be a string");
    ids.push_back(atom["id"].get<std::string>());
    weights.push_back(weight_field(atom["weight"]));
  }
  return MeasureSpace(std::move(ids), std::move(weights));
}

// Functions are keyed by atom id and must cover the space exactly.
SimpleFunction parse_function(const json& j, const MeasureSpace& space,
                              const std::string& name) {
  if (!j.is_object()) {
    throw input_error(name + " must map atom ids to values");
  }
  if (j.size() != space.size()) {
    throw input_error(name + " must assign a value to every atom");
  }
  std::vector<double> values(space.size());
  for (const auto& [id, value] : j.items()) {
    const auto index = space.find(id);
    if (!index) throw input_error(name + " uses unknown atom id: " + id);
    values[*index] = number_field(value, name + "[" + id + "]");
  }
  return SimpleFunction(std::move(values));
}

FiniteSupportDirection parse_direction(const json& j) {
  if (!j.is_object()) {
    throw input_error("sequence direction must map indices to values");
  }
  std::map<std::size_t, double> entries;
  for (const auto& [key, value] : j.items()) {
    std::size_t pos = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(key, &pos);
    } catch (const std::exception&) {
      throw input_error("direction key is not an index: " + key);
    }
    if (pos != key.size()) {
      throw input_error("direction key is not an index: " + key);
    }
    entries[static_cast<std::size_t>(n)] =
        number_field(value, "h[" + key + "]");
  }
  return FiniteSupportDirection(std::move(entries));
}

GeoTailSequence parse_sequence(const json& j) {
  if (!j.is_object() || !j.contains("prefix") || !j.contains("tail_start") ||
      !j.contains("tail_coeff") || !j.contains("tail_ratio")) {
    throw input_error(
        "sequence needs prefix, tail_start, tail_coeff and tail_ratio");
  }
  if (!j["prefix"].is_array()) {
    throw input_error("sequence prefix must be an array");
  }
  std::vector<double> prefix;
  for (const auto& v : j["prefix"]) {
    prefix.push_back(number_field(v, "sequence prefix entry"));
  }
  if (!j["tail_start"].is_number_integer() ||
      j["tail_start"].get<long long>() !=
          static_cast<long long>(prefix.size())) {
    throw input_error("tail_start must equal the prefix length");
  }
  return GeoTailSequence(std::move(prefix),
                         number_field(j["tail_coeff"], "tail_coeff"),
                         number_field(j["tail_ratio"], "tail_ratio"));
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw input_error("problem file must be a JSON object");

  ProblemFile out;
  if (j.contains("space")) out.space = parse_space(j["space"]);
  if (j.contains("f")) {
    if (!out.space) throw input_error("f needs a space");
    out.f = parse_function(j["f"], *out.space, "f");
  }
  if (j.contains("sequence")) out.sequence = parse_sequence(j["sequence"]);
  if (j.contains("h")) {
    if (out.space) {
      out.h = parse_function(j["h"], *out.space, "h");
    } else if (out.sequence) {
      out.sequence_direction = parse_direction(j["h"]);
    } else {
      throw input_error("h needs a space or a sequence");
    }
  }
  if (j.contains("p")) out.p = number_field(j["p"], "p");
  if (j.contains("zero_tol")) {
    const double z = number_field(j["zero_tol"], "zero_tol");
    if (!(z >= 0.0) || !std::isfinite(z)) {
      throw input_error("zero_tol must be finite and >= 0");
    }
    out.zero_tol = z;
  }
  return out;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str());
}

std::vector<std::string> snap_zeros(const MeasureSpace& space,
                                    SimpleFunction& f, double zero_tol) {
  if (!(zero_tol >= 0.0) || !std::isfinite(zero_tol)) {
    throw input_error("zero_tol must be finite and >= 0");
  }
  std::vector<std::string> snapped;
  if (zero_tol == 0.0) return snapped;
  std::vector<double> values = f.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0 && std::abs(values[i]) <= zero_tol) {
      values[i] = 0.0;
      snapped.push_back(space.id(i));
    }
  }
  f = SimpleFunction(std::move(values));
  return snapped;
}

}  // namespace gateaux
