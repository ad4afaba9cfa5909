#pragma once

#include <array>
#include <string>
#include <vector>

#include "pants/special_loops.hpp"

namespace pants {

/// (m_1, m_2, m_3): number of loops around each puncture in a lamination.
using LaminationType = std::array<int, 3>;

/// Integer points of { x <= a, y <= b, z <= c, y+z <= d, x+z <= e, x+y <= f }
/// in the non-negative octant, sorted lexicographically.
struct LaminationPolytope {
  SigmaVector tau;
  std::vector<LaminationType> points;

  bool contains(const LaminationType& p) const;
};

LaminationPolytope enumerate_points(const SigmaVector& tau);

/// The polytope cut out by sigma_of(g).
LaminationPolytope lamination_space(const SigmaGraph& g);

struct RealizabilityVerdict {
  enum class Tag { Realizable, ViolatesT1, ViolatesT2 };
  Tag tag = Tag::Realizable;
  int index = 0;  ///< 1-based index of the first violated inequality

  bool realizable() const noexcept { return tag == Tag::Realizable; }
  std::string str() const;
  bool operator==(const RealizabilityVerdict&) const = default;
};

/// Checks (T1) for i = 1..3, then (T2) for i = 1..3, reporting the first
/// failure. Throws NonPositiveDelta when some delta_i < 1 and InvalidTau when
/// some mu_i < 0.
RealizabilityVerdict check_realizable(const SigmaVector& tau);

NuVector nu_transform(const SigmaVector& tau);
SigmaVector tau_from_mu_nu(const std::array<int, 3>& mu, const NuVector& nu);

/// The compact form 0 <= nu_i <= min(mu_{i+1}, mu_{i+2}, nu_{i+1} + nu_{i+2} + 1).
bool nu_conditions_hold(const std::array<int, 3>& mu, const NuVector& nu);

}  // namespace pants
