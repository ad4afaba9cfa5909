#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "pants/combmap.hpp"

namespace pants {

/// Surface assembled from polygons glued along shared sides.
///
/// Polygons list their corners counterclockwise. Two sides denote the same
/// edge when they join the same pair of vertices and carry the same group
/// tag; a side used once is a boundary side. Boundary cycles are capped with
/// hole faces when the complex is turned into a map.
class PolygonComplex {
 public:
  int add_vertex() { return num_vertices_++; }
  int num_vertices() const noexcept { return num_vertices_; }

  /// groups[j] tags side j (from corner j to corner j+1); empty means all 0.
  void add_polygon(std::vector<int> ccw_corners, std::vector<int> groups = {});

  struct Polygon {
    std::vector<int> corners;
    std::vector<int> groups;
  };
  const std::vector<Polygon>& polygons() const noexcept { return polygons_; }

  /// Sides used by exactly one polygon, as (tail, head, group) in polygon order.
  std::vector<std::tuple<int, int, int>> boundary_sides() const;

  struct Built {
    CombinatorialMap map;
    /// Map vertex for each complex vertex (-1 if unused).
    std::vector<VertexId> vertex;
    /// Dart running tail -> head along the edge with the given group.
    std::map<std::tuple<int, int, int>, Dart> dart_of;
    /// Face of each polygon in add order.
    std::vector<FaceId> polygon_face;

    Dart dart(int tail, int head, int group = 0) const { return dart_of.at({tail, head, group}); }
  };

  /// Throws InvariantViolated when a side is used more than twice, the
  /// gluing is not orientable, or a vertex is not a disk neighbourhood.
  Built build() const;

 private:
  int num_vertices_ = 0;
  std::vector<Polygon> polygons_;
};

}  // namespace pants
