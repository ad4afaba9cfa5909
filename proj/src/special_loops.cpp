#include "pants/special_loops.hpp"

#include <algorithm>

#include "pants/error.hpp"
#include "pants/polytope.hpp"

namespace pants {

std::string SigmaVector::str() const {
  std::string out = "(";
  const auto v = as_array();
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(v[j]);
  }
  return out + ")";
}

std::string NuVector::str() const {
  return "(" + std::to_string(nu[0]) + "," + std::to_string(nu[1]) + "," + std::to_string(nu[2]) +
         ")";
}

SimpleLoop loop_toward(const SigmaGraph& g, int i, int j, int k) {
  const FaceId target = g.marked(j);
  if (i == j) throw Error(ErrorCode::OutOfRange, "target index equals source index");
  const int limit = g.distances()(g.marked(i), target);
  if (k < 1 || k > limit) {
    throw Error(ErrorCode::OutOfRange, "k=" + std::to_string(k) + " outside [1, " +
                                           std::to_string(limit) + "]");
  }
  for (auto& loop : boundary_loops(g, i, k)) {
    if (std::find(loop.side_b.begin(), loop.side_b.end(), target) != loop.side_b.end()) {
      return std::move(loop);
    }
  }
  throw Error(ErrorCode::InvariantViolated, "no boundary loop separates F_" + std::to_string(i) +
                                                " from F_" + std::to_string(j));
}

SpecialLoopFamily special_family(const SigmaGraph& g, int i) {
  SpecialLoopFamily family{i, {}};
  const int a = next_index(i);
  const int b = prev_index(i);
  const FaceId center = g.marked(i);
  const int kmax = std::min(g.distances()(center, g.marked(a)), g.distances()(center, g.marked(b)));
  // Once the loops toward the two other punctures split they stay split.
  for (int k = 1; k <= kmax; ++k) {
    auto toward_a = loop_toward(g, i, a, k);
    const auto toward_b = loop_toward(g, i, b, k);
    if (!toward_a.same_edges(toward_b)) break;
    family.loops.push_back(std::move(toward_a));
  }
  return family;
}

SigmaVector sigma_of(const SigmaGraph& g) {
  SigmaVector s;
  for (int i = 1; i <= 3; ++i) {
    s.mu[i - 1] = static_cast<int>(special_family(g, i).loops.size());
    s.delta[i - 1] = g.delta(i);
  }
  return s;
}

NuVector depth_vector(const SigmaGraph& g) { return nu_transform(sigma_of(g)); }

}  // namespace pants
