#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "pants/blocks.hpp"
#include "pants/error.hpp"
#include "pants/family.hpp"
#include "pants/io.hpp"

namespace pants::testing {

// Grows a map from a single edge by inserting edges inside faces (splitting
// them) and pendant edges, until it has `faces` faces.
inline CombinatorialMap random_map(std::mt19937& rng, int faces) {
  std::vector<std::vector<Dart>> rot{{0}, {1}};
  auto current = CombinatorialMap::build(rot);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  auto insert_after = [&](VertexId v, Dart after, Dart d) {
    auto& r = rot[v];
    r.insert(std::find(r.begin(), r.end(), after) + 1, d);
  };
  while (current.num_faces() < faces) {
    const auto face = current.face(pick(current.num_faces()));
    const Dart d1 = face[pick(static_cast<int>(face.size()))];
    const Dart x = 2 * current.num_edges();
    const int roll = pick(10);
    if (roll < 3) {
      rot.push_back({x + 1});
      insert_after(current.head(d1), CombinatorialMap::twin(d1), x);
    } else {
      const Dart d2 = face[pick(static_cast<int>(face.size()))];
      if (d1 == d2 && roll < 8) continue;
      insert_after(current.head(d1), CombinatorialMap::twin(d1), x);
      insert_after(current.head(d2), CombinatorialMap::twin(d2), x + 1);
    }
    current = CombinatorialMap::build(rot);
  }
  return current;
}

inline SigmaGraph random_sigma_graph(std::mt19937& rng, int max_faces) {
  const int faces = std::uniform_int_distribution<int>(3, max_faces)(rng);
  auto map = random_map(rng, faces);
  std::vector<FaceId> ids(map.num_faces());
  for (FaceId f = 0; f < map.num_faces(); ++f) ids[f] = f;
  std::shuffle(ids.begin(), ids.end(), rng);
  return SigmaGraph(std::move(map), {ids[0], ids[1], ids[2]});
}

inline SigmaGraph theta_graph() {
  return SigmaGraph(CombinatorialMap::build({{0, 2, 4}, {1, 5, 3}}), {0, 1, 2});
}

inline SigmaGraph data_graph(const std::string& name) {
  return read_graph("data/" + name + ".json").sigma_graph();
}

inline std::vector<BlockParams> pillowcase_grid(int max_leg) {
  std::vector<BlockParams> out;
  for (int a = 0; a <= max_leg; ++a)
    for (int b = 0; b <= max_leg; ++b)
      for (int c = 0; c <= max_leg; ++c)
        for (int x = 0; x <= std::min(b, c); ++x)
          for (int y = 0; y <= std::min(c, a); ++y)
            for (int z = 0; z <= std::min(a, b); ++z) out.push_back(BlockParams::from_array({a, b, c, x, y, z}));
  return out;
}

// Valid family specs with every count at most max_count.
inline std::vector<FamilySpec> family_grid(int max_count) {
  std::vector<FamilySpec> out;
  FamilySpec s;
  for (int c1 = 0; c1 <= max_count; ++c1)
    for (int c2 = 0; c2 <= max_count; ++c2)
      for (int c3 = 0; c3 <= max_count; ++c3)
        for (int p1 = 0; p1 <= std::min(c2, c3); ++p1)
          for (int p2 = 0; p2 <= std::min(c3, c1); ++p2)
            for (int p3 = 0; p3 <= std::min(c1, c2); ++p3)
              for (int mask = 0; mask < 8; ++mask) {
                s.counts = {c1, c2, c3};
                s.depths = {p1, p2, p3};
                s.caps = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
                try {
                  s.validate();
                } catch (const Error&) {
                  continue;
                }
                out.push_back(s);
              }
  return out;
}

}  // namespace pants::testing
