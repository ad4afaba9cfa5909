#include "pants/constructor.hpp"

#include <algorithm>

#include "pants/error.hpp"
#include "pants/polytope.hpp"

namespace pants {

namespace {

std::string tuple_str(const std::array<int, 6>& v) {
  std::string out = "(";
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? "," : "") + std::to_string(v[j]);
  return out + ")";
}

SigmaVector permuted(const SigmaVector& tau, const std::array<int, 3>& order) {
  SigmaVector out;
  for (int k = 0; k < 3; ++k) {
    out.mu[k] = tau.mu[order[k] - 1];
    out.delta[k] = tau.delta[order[k] - 1];
  }
  return out;
}

// Marked face k of g becomes marked face order[k] of the result.
SigmaGraph relabel(const SigmaGraph& g, const std::array<int, 3>& order) {
  std::array<FaceId, 3> marked{};
  for (int k = 0; k < 3; ++k) marked[order[k] - 1] = g.marked(k + 1);
  return SigmaGraph(g.map(), marked);
}

struct Attempt {
  std::optional<SigmaGraph> graph;
  Recipe recipe;
  std::string detail;
  std::string reason;
};

Attempt from_pillowcase(Recipe recipe, const std::array<int, 6>& raw) {
  Attempt a{std::nullopt, recipe, "t=" + tuple_str(raw), ""};
  const auto t = BlockParams::from_array(raw);
  if (!t.valid()) {
    a.reason = "t=" + tuple_str(raw) + " is not a valid block parameter";
    return a;
  }
  a.graph = pillowcase(t);
  return a;
}

Attempt from_families(Recipe recipe, const FamilySpec& spec) {
  Attempt a{std::nullopt, recipe, spec.str(), ""};
  try {
    a.graph = family_graph(spec);
  } catch (const Error& e) {
    a.reason = e.what();
  }
  return a;
}

// The direct recipe for tau, with indices already sorted by decreasing nu.
Attempt recipe_for(const SigmaVector& tau) {
  const auto nu = nu_transform(tau).nu;
  const auto& mu = tau.mu;
  if (nu[1] < nu[0] && nu[0] <= mu[0] + nu[1]) {
    return from_pillowcase(Recipe::ShiftedPillowcase,
                           {nu[1] - nu[0] + mu[0], mu[1] - 1, mu[2] - 1, nu[0] - 1,
                            2 * nu[1] - nu[0], nu[1] + nu[2] - nu[0]});
  }
  if (nu[0] == nu[1] && nu[2] >= 1) {
    return from_pillowcase(Recipe::BalancedPillowcase,
                           {mu[0] - 1, mu[1] - 1, mu[2] - 1, nu[0] - 1, nu[1] - 1, nu[2] - 1});
  }
  FamilySpec spec;
  if (nu[0] == nu[1] && mu[2] >= 1) {
    spec.counts = mu;
    spec.depths = {nu[0], nu[1], 0};
    return from_families(Recipe::CrossedFamilies, spec);
  }
  if (nu[0] == nu[1]) {
    spec.counts = {mu[0], mu[1], 0};
    spec.caps = {mu[0] > 0, mu[1] > 0, false};
    return from_families(Recipe::CappedFamilies, spec);
  }
  spec.counts = {0, mu[1], mu[2]};
  spec.depths = {nu[0], 0, 0};
  return from_families(Recipe::DeepCrossing, spec);
}

}  // namespace

std::string to_string(Recipe r) {
  switch (r) {
    case Recipe::ShiftedPillowcase: return "shifted-pillowcase";
    case Recipe::BalancedPillowcase: return "balanced-pillowcase";
    case Recipe::CrossedFamilies: return "crossed-families";
    case Recipe::CappedFamilies: return "capped-families";
    case Recipe::DeepCrossing: return "deep-crossing";
    case Recipe::SearchPillowcase: return "search-pillowcase";
    case Recipe::SearchFamilies: return "search-families";
  }
  return "";
}

std::array<int, 3> nu_order(const SigmaVector& tau) {
  const auto nu = nu_transform(tau).nu;
  std::array<int, 3> order{1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return nu[a - 1] > nu[b - 1]; });
  return order;
}

Construction construct(const SigmaVector& tau) {
  const auto verdict = check_realizable(tau);
  if (verdict.tag != RealizabilityVerdict::Tag::Realizable) {
    throw Error(ErrorCode::NotRealizable, tau.str() + ": " + verdict.str());
  }
  const auto order = nu_order(tau);
  auto attempt = recipe_for(permuted(tau, order));
  std::string reason = attempt.reason;
  if (attempt.graph) {
    auto g = relabel(*attempt.graph, order);
    const auto got = sigma_of(g);
    if (got == tau) return {std::move(g), attempt.recipe, attempt.detail, false, ""};
    reason = to_string(attempt.recipe) + " " + attempt.detail + " gave " + got.str();
  }
  try {
    auto found = search(tau);
    found.reason = reason;
    return found;
  } catch (const Error& e) {
    throw Error(ErrorCode::ConstructionFailed, tau.str() + ": " + reason + "; " + e.what());
  }
}

Construction search(const SigmaVector& tau) {
  const auto& mu = tau.mu;
  for (int l1 = 0; l1 < mu[0]; ++l1) {
    for (int l2 = 0; l2 < mu[1]; ++l2) {
      for (int l3 = 0; l3 < mu[2]; ++l3) {
        for (int n1 = 0; n1 <= std::min(l2, l3); ++n1) {
          for (int n2 = 0; n2 <= std::min(l3, l1); ++n2) {
            for (int n3 = 0; n3 <= std::min(l1, l2); ++n3) {
              const auto t = BlockParams::from_array({l1, l2, l3, n1, n2, n3});
              if (!(pillowcase_sigma(t) == tau)) continue;
              auto g = pillowcase(t);
              if (sigma_of(g) == tau) {
                return {std::move(g), Recipe::SearchPillowcase, "t=" + t.str(), true, ""};
              }
            }
          }
        }
      }
    }
  }

  const int deepest = std::max({tau.delta[0], tau.delta[1], tau.delta[2]});
  FamilySpec spec;
  for (int c1 = 0; c1 <= mu[0] + 1; ++c1) {
    for (int c2 = 0; c2 <= mu[1] + 1; ++c2) {
      for (int c3 = 0; c3 <= mu[2] + 1; ++c3) {
        spec.counts = {c1, c2, c3};
        if ((c1 == 0) + (c2 == 0) + (c3 == 0) > 1) continue;
        for (int p1 = 0; p1 <= std::min({c2, c3, deepest}); ++p1) {
          for (int p2 = 0; p2 <= std::min({c3, c1, deepest}); ++p2) {
            for (int p3 = 0; p3 <= std::min({c1, c2, deepest}); ++p3) {
              if (p1 > 0 && p2 > 0 && p3 > 0) continue;
              spec.depths = {p1, p2, p3};
              for (int mask = 0; mask < 8; ++mask) {
                spec.caps = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
                try {
                  spec.validate();
                } catch (const Error&) {
                  continue;
                }
                auto g = family_graph(spec);
                if (sigma_of(g) == tau) {
                  return {std::move(g), Recipe::SearchFamilies, spec.str(), true, ""};
                }
              }
            }
          }
        }
      }
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no pillowcase or family graph realises " + tau.str());
}

}  // namespace pants
