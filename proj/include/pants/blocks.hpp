#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pants/exploration.hpp"
#include "pants/polygon_complex.hpp"
#include "pants/special_loops.hpp"

namespace pants {

/// t = (l_1, l_2, l_3, n_1, n_2, n_3): leg lengths and web sizes.
struct BlockParams {
  std::array<int, 3> legs{};
  std::array<int, 3> webs{};

  static BlockParams from_array(const std::array<int, 6>& v) {
    return {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
  }
  std::array<int, 6> as_array() const {
    return {legs[0], legs[1], legs[2], webs[0], webs[1], webs[2]};
  }
  int l(int i) const { return legs[i - 1]; }
  int n(int i) const { return webs[i - 1]; }

  /// Non-negative entries with n_i <= min(l_{i+1}, l_{i+2}).
  bool valid() const;
  std::string str() const;
  bool operator==(const BlockParams&) const = default;
};

/// Disk-shaped piece with named boundary edges. Labels are
/// "E1", "e1", "e'1", "f^k_{i,j}", "f'^k_{i,j}".
struct LabeledBlock {
  std::optional<CombinatorialMap> map;  ///< empty for the empty web
  FaceId outer_face = -1;
  std::map<std::string, EdgeId> labels;
  /// Boundary edges glued to the mirror copy when pillowcasing.
  std::vector<EdgeId> seam;

  bool empty() const noexcept { return !map.has_value(); }
};

/// Triangle with sides e'1, e'2, e'3 in cyclic order.
LabeledBlock connector();
/// Single row of l boxes; l = 0 gives the bare edge E_i = e_i.
LabeledBlock leg(int i, int l);
/// Staircase Young diagram with rows n, n-1, ..., 1.
LabeledBlock web(int i, int n);

/// Disk graph obtained by gluing the connector, the legs and the webs.
/// Throws InvariantViolated for invalid t.
LabeledBlock gamma(const BlockParams& t);

/// Gamma_t doubled along its boundary except the E_i / E'_i pairs; the three
/// resulting digons are the marked faces.
SigmaGraph pillowcase(const BlockParams& t);

struct Pillowcase {
  SigmaGraph graph;
  /// Dart involution exchanging the two copies of Gamma_t.
  std::vector<Dart> mirror;
};
Pillowcase pillowcase_with_mirror(const BlockParams& t);

/// Closed forms for sigma of the pillowcase:
/// M_i = 1 + l_i + max(0, floor((n_i - max(n_{i+1}, n_{i+2})) / 2)),
/// d_i = 1 + l_{i+1} + l_{i+2} - n_i.
SigmaVector pillowcase_sigma(const BlockParams& t);

/// Gamma_t as a polygon complex plus the corner ids of each E_i side
/// (running a_i -> b_i along the polygon that owns it).
struct GammaComplex {
  PolygonComplex complex;
  std::array<std::pair<int, int>, 3> big_e{};
};
GammaComplex gamma_complex(const BlockParams& t);

}  // namespace pants
