#pragma once

#include <array>
#include <optional>
#include <string>

#include "pants/blocks.hpp"
#include "pants/exploration.hpp"
#include "pants/family.hpp"
#include "pants/special_loops.hpp"

namespace pants {

enum class Recipe {
  ShiftedPillowcase,   ///< nu_2 < nu_1 <= mu_1 + nu_2
  BalancedPillowcase,  ///< nu_1 = nu_2, nu_3 >= 1
  CrossedFamilies,     ///< nu_1 = nu_2, nu_3 = 0, mu_3 >= 1
  CappedFamilies,      ///< all nu = 0, mu_3 = 0
  DeepCrossing,        ///< nu_1 > mu_1 + nu_2
  SearchPillowcase,
  SearchFamilies,
};

std::string to_string(Recipe r);

struct Construction {
  SigmaGraph graph;
  Recipe recipe;
  /// Parameters used, e.g. "t=(0,2,2,2,-1,-1)" or a family spec.
  std::string detail;
  /// True when the direct recipe was unusable and search produced the graph.
  bool fallback = false;
  /// Why the direct recipe was skipped (empty unless fallback).
  std::string reason;
};

/// Witness with sigma_of(graph) == tau. Throws NotRealizable for tau outside
/// the realizable set, ConstructionFailed if no verified witness was found.
Construction construct(const SigmaVector& tau);

/// Pillowcases by closed-form inversion, then family graphs by forward
/// analysis. Throws SearchExhausted.
Construction search(const SigmaVector& tau);

/// Indices ordered so that nu is non-increasing (ties keep index order).
std::array<int, 3> nu_order(const SigmaVector& tau);

}  // namespace pants
