#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pants/exploration.hpp"
#include "pants/polytope.hpp"

namespace pants {

/// Map plus the optional marked faces read from a graph document.
struct GraphDocument {
  CombinatorialMap map;
  std::optional<std::array<FaceId, 3>> marked;

  /// Throws BadMarkedIndex when the document has no marked faces.
  SigmaGraph sigma_graph() const;
};

/// {"vertices": [[darts in ccw order], ...], "marked_faces": [f1, f2, f3]}.
/// Throws ParseError for malformed JSON or a wrong shape; map errors
/// (MalformedRotation, NonSpherical, ...) propagate.
GraphDocument parse_graph(const std::string& text);
GraphDocument read_graph(const std::string& path);

std::string graph_json(const CombinatorialMap& map,
                       const std::optional<std::array<FaceId, 3>>& marked = std::nullopt);
std::string graph_json(const SigmaGraph& g);
void write_text(const std::string& path, const std::string& text);

/// {"tau": [...], "points": [[x,y,z], ...]}.
std::string polytope_json(const LaminationPolytope& poly, bool exclude_origin = false);

/// Array of dart lists.
std::string loops_json(const std::vector<SimpleLoop>& loops);

}  // namespace pants
