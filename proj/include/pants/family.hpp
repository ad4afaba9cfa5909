#pragma once

#include <array>
#include <string>

#include "pants/arrangement.hpp"
#include "pants/exploration.hpp"

namespace pants {

/// How two crossing families of nested circles meet at depth p. Circles are
/// numbered from the outermost (a = 1).
enum class CrossingLaw {
  /// a and b cross when a + b <= p and touch when a + b = p + 1.
  TouchDeepest,
  /// a and b cross when a + b <= p + 1; nothing touches.
  CrossOnly,
};

/// Nested circle families around the three holes.
struct FamilySpec {
  std::array<int, 3> counts{};
  /// depths[k-1] = p_k, the crossing depth of families k+1 and k+2.
  std::array<int, 3> depths{};
  /// Extra circle around family i, tangent to its outermost circle.
  std::array<bool, 3> caps{};
  CrossingLaw law = CrossingLaw::TouchDeepest;

  int count(int i) const { return counts[i - 1]; }
  int p(int k) const { return depths[k - 1]; }
  bool cap(int i) const { return caps[i - 1]; }
  /// Depth between families i and j (i != j).
  int depth_between(int i, int j) const { return p(6 - i - j); }

  /// Throws InvariantViolated or OverlappingCrossings.
  void validate() const;
  std::string str() const;
};

/// Marked faces: the face at each hole, i.e. inside the innermost circle of
/// its family, or the outer face for a hole without circles.
SigmaGraph family_graph(const FamilySpec& spec);

/// The drawing behind family_graph, with the hole positions.
struct FamilyDrawing {
  Arrangement arrangement;
  std::array<Point, 3> holes{};
  std::array<bool, 3> at_infinity{};
};
FamilyDrawing family_drawing(const FamilySpec& spec);

}  // namespace pants
