#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pants/arrangement.hpp"
#include "pants/exploration.hpp"

namespace pants {

struct RenderOptions {
  int size = 640;
  /// Face drawn as the unbounded region. Defaults to the largest face.
  std::optional<FaceId> outer;
  bool special_loops = true;
};

/// Barycentric layout: the vertices of the outer face sit on the unit
/// circle, every other vertex at the weighted mean of its neighbours. When
/// that places two vertices together the inner vertices are spread out by a
/// short force-directed pass.
std::vector<Point> tutte_layout(const CombinatorialMap& map, FaceId outer);

/// Default outer face: largest face with at least three distinct vertices.
FaceId default_outer_face(const CombinatorialMap& map);

/// SVG 1.1 document with marked faces labelled and, optionally, the special
/// loops of each marked face drawn in its colour.
std::string render_svg(const SigmaGraph& g, const RenderOptions& options = {});

}  // namespace pants
