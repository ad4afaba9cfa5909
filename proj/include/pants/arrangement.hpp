#pragma once

#include <vector>

#include "pants/combmap.hpp"

namespace pants {

struct Point {
  double x = 0;
  double y = 0;
};

/// Circle (center a, radius r, parametrised by angle) or straight segment
/// from a to b (parametrised over [0,1]).
struct Curve {
  bool circle = true;
  Point a;
  Point b;
  double r = 0;

  Point at(double t) const;
  /// Derivative with respect to the parameter.
  Point tangent(double t) const;
};

/// Planar map induced by a finite set of circles and straight segments.
///
/// Every intersection or tangency point becomes a vertex; the pieces of the
/// curves between consecutive vertices become edges. A curve that meets
/// nothing gets one vertex of its own.
class Arrangement {
 public:
  int add_circle(Point center, double radius);
  int add_segment(Point a, Point b);
  const std::vector<Curve>& curves() const noexcept { return curves_; }

  struct Edge {
    int curve = -1;
    /// Dart 2e runs from parameter t0 to t1 (t0 < t1).
    double t0 = 0;
    double t1 = 0;
  };

  struct Result {
    CombinatorialMap map;
    std::vector<Curve> curves;
    std::vector<Edge> edges;
    std::vector<Point> vertex_position;

    /// Face containing p; p must not lie on a curve.
    FaceId face_at(Point p) const;
    /// The unbounded face.
    FaceId outer_face() const;
  };

  /// Throws Disconnected when the curves do not form a connected drawing.
  Result build() const;

 private:
  std::vector<Curve> curves_;
};

}  // namespace pants
