#pragma once

#include <array>
#include <string>
#include <vector>

#include "pants/exploration.hpp"

namespace pants {

/// The sextuple (M_1, M_2, M_3, d_1, d_2, d_3): loop capacities around each
/// puncture followed by the distances between the two other marked faces.
/// Also used as a realizability target.
struct SigmaVector {
  std::array<int, 3> mu{};
  std::array<int, 3> delta{};

  static SigmaVector from_array(const std::array<int, 6>& v) {
    return {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
  }
  std::array<int, 6> as_array() const {
    return {mu[0], mu[1], mu[2], delta[0], delta[1], delta[2]};
  }
  /// 1-based accessors matching the marked-face numbering.
  int m(int i) const { return mu[i - 1]; }
  int d(int i) const { return delta[i - 1]; }

  std::string str() const;
  bool operator==(const SigmaVector&) const = default;
  auto operator<=>(const SigmaVector&) const = default;
};

/// nu_i = mu_{i+1} + mu_{i+2} - delta_i.
struct NuVector {
  std::array<int, 3> nu{};

  int n(int i) const { return nu[i - 1]; }
  std::string str() const;
  bool operator==(const NuVector&) const = default;
};

/// Nested special loops C_i^1, ..., C_i^{M_i} around marked face F_i.
struct SpecialLoopFamily {
  int i = 0;
  std::vector<SimpleLoop> loops;
};

/// The loop of boundary_loops(g, i, k) whose far side holds F_j.
/// Throws OutOfRange unless j != i and 1 <= k <= d(F_i, F_j).
SimpleLoop loop_toward(const SigmaGraph& g, int i, int j, int k);

SpecialLoopFamily special_family(const SigmaGraph& g, int i);

SigmaVector sigma_of(const SigmaGraph& g);

/// Depths of intersection n_i(G), computed from sigma_of.
NuVector depth_vector(const SigmaGraph& g);

}  // namespace pants
