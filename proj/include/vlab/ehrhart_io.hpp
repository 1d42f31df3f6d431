#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlab/core/error.hpp"
#include "vlab/ehrhart.hpp"

namespace vlab {

/// Parses {"vertices": [[int, ...], ...]}; rows must share one length and
/// every entry must be an integer.
inline std::vector<Point> parse_polytope_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionFailed(std::string("polytope JSON does not parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw PreconditionFailed("polytope JSON must be an object with a \"vertices\" array");
  std::vector<Point> out;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array()) throw PreconditionFailed("each vertex must be an array of integers");
    Point p;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw PreconditionFailed("vertex coordinates must be integers");
      p.push_back(x.get<std::int64_t>());
    }
    if (!out.empty() && p.size() != out.front().size()) throw PreconditionFailed("vertex rows differ in length");
    out.push_back(std::move(p));
  }
  if (out.empty()) throw PreconditionFailed("vertex list is empty");
  return out;
}

inline std::vector<Point> load_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionFailed("cannot open polytope file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polytope_json(ss.str());
}

inline std::string polytope_to_json(const std::vector<Point>& vertices) {
  nlohmann::json doc;
  doc["vertices"] = vertices;
  return doc.dump();
}

}  // namespace vlab
