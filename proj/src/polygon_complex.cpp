#include "pants/polygon_complex.hpp"

#include <algorithm>
#include <string>

#include "pants/error.hpp"

namespace pants {

namespace {

using Key = std::tuple<int, int, int>;

Key edge_key(int u, int v, int group) { return {std::min(u, v), std::max(u, v), group}; }

}  // namespace

void PolygonComplex::add_polygon(std::vector<int> ccw_corners, std::vector<int> groups) {
  if (ccw_corners.empty()) throw Error(ErrorCode::InvariantViolated, "empty polygon");
  if (groups.empty()) groups.assign(ccw_corners.size(), 0);
  if (groups.size() != ccw_corners.size()) {
    throw Error(ErrorCode::InvariantViolated, "group tags do not match polygon sides");
  }
  for (const int v : ccw_corners) {
    if (v < 0 || v >= num_vertices_) throw Error(ErrorCode::InvariantViolated, "unknown corner");
  }
  polygons_.push_back({std::move(ccw_corners), std::move(groups)});
}

std::vector<std::tuple<int, int, int>> PolygonComplex::boundary_sides() const {
  std::map<Key, int> uses;
  for (const auto& p : polygons_) {
    for (std::size_t j = 0; j < p.corners.size(); ++j) {
      ++uses[edge_key(p.corners[j], p.corners[(j + 1) % p.corners.size()], p.groups[j])];
    }
  }
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& p : polygons_) {
    for (std::size_t j = 0; j < p.corners.size(); ++j) {
      const int u = p.corners[j];
      const int v = p.corners[(j + 1) % p.corners.size()];
      if (uses[edge_key(u, v, p.groups[j])] == 1) out.emplace_back(u, v, p.groups[j]);
    }
  }
  return out;
}

PolygonComplex::Built PolygonComplex::build() const {
  std::map<Key, int> edge_ids;
  std::map<Key, int> uses;
  std::vector<std::vector<Dart>> polygon_darts;
  std::vector<int> tail;
  auto set_tail = [&](Dart d, int v) {
    if (static_cast<int>(tail.size()) <= d) tail.resize(d + 1, -1);
    tail[d] = v;
  };

  std::map<std::tuple<int, int, int>, Dart> dart_of;
  for (const auto& p : polygons_) {
    std::vector<Dart> darts;
    const std::size_t m = p.corners.size();
    for (std::size_t j = 0; j < m; ++j) {
      const int u = p.corners[j];
      const int v = p.corners[(j + 1) % m];
      const Key key = edge_key(u, v, p.groups[j]);
      auto [it, fresh] = edge_ids.try_emplace(key, static_cast<int>(edge_ids.size()));
      const int used = uses[key]++;
      if (used >= 2) {
        throw Error(ErrorCode::InvariantViolated,
                    "side " + std::to_string(u) + "-" + std::to_string(v) + " used three times");
      }
      const Dart d = 2 * it->second + used;
      if (used == 1 && u != v && tail[d ^ 1] != v) {
        throw Error(ErrorCode::InvariantViolated, "non-orientable gluing of side " +
                                                      std::to_string(u) + "-" + std::to_string(v));
      }
      set_tail(d, u);
      set_tail(d ^ 1, v);
      dart_of[{u, v, p.groups[j]}] = d;
      dart_of[{v, u, p.groups[j]}] = d ^ 1;
      darts.push_back(d);
    }
    polygon_darts.push_back(std::move(darts));
  }

  const int n = 2 * static_cast<int>(edge_ids.size());
  tail.resize(n, -1);
  std::vector<Dart> next(n, -1);
  std::vector<Dart> prev(n, -1);
  for (const auto& darts : polygon_darts) {
    const std::size_t m = darts.size();
    for (std::size_t j = 0; j < m; ++j) {
      const Dart d = darts[j];
      const Dart nd = darts[(j + m - 1) % m] ^ 1;
      next[d] = nd;
      prev[nd] = d;
    }
  }

  std::vector<std::vector<Dart>> at(num_vertices_);
  for (Dart d = 0; d < n; ++d) at[tail[d]].push_back(d);

  // Close the open corner chains at each vertex; the gaps become hole faces.
  for (int v = 0; v < num_vertices_; ++v) {
    if (at[v].empty()) continue;
    std::vector<std::pair<Dart, Dart>> chains;
    std::size_t covered = 0;
    for (const Dart d : at[v]) {
      if (prev[d] != -1) continue;
      Dart end = d;
      ++covered;
      while (next[end] != -1) {
        end = next[end];
        ++covered;
      }
      chains.emplace_back(d, end);
    }
    if (chains.empty()) {
      Dart cur = at[v].front();
      do {
        ++covered;
        cur = next[cur];
      } while (cur != at[v].front());
    }
    if (covered != at[v].size() || chains.size() > 2) {
      throw Error(ErrorCode::InvariantViolated,
                  "vertex " + std::to_string(v) + " does not have a disk neighbourhood");
    }
    for (std::size_t c = 0; c < chains.size(); ++c) {
      const Dart end = chains[c].second;
      const Dart start = chains[(c + 1) % chains.size()].first;
      next[end] = start;
      prev[start] = end;
    }
  }

  std::vector<std::vector<Dart>> rotations;
  std::vector<VertexId> vertex(num_vertices_, -1);
  for (int v = 0; v < num_vertices_; ++v) {
    if (at[v].empty()) continue;
    const Dart first = *std::min_element(at[v].begin(), at[v].end());
    std::vector<Dart> rot;
    Dart cur = first;
    do {
      rot.push_back(cur);
      cur = next[cur];
    } while (cur != first);
    vertex[v] = static_cast<VertexId>(rotations.size());
    rotations.push_back(std::move(rot));
  }
  Built out{CombinatorialMap::build(std::move(rotations)), std::move(vertex), std::move(dart_of),
            {}};
  for (const auto& darts : polygon_darts) {
    out.polygon_face.push_back(out.map.face_of(darts.front() ^ 1));
  }
  return out;
}

}  // namespace pants
