#include "pants/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "pants/error.hpp"

namespace pants {

namespace {

bool disjoint(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & b[w]) return false;
  }
  return true;
}

class NodeBudget {
 public:
  explicit NodeBudget(std::size_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_) {
      throw Error(ErrorCode::LimitExceeded, "search exceeded " + std::to_string(limit_) + " nodes");
    }
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

}  // namespace

bool CycleCatalog::conflict(std::size_t a, std::size_t b) const {
  return a != b && !disjoint(masks[a], masks[b]);
}

namespace {

// Edge bits: 1 if a fixed dual path from F_1 to F_2 crosses the edge, 2 for
// one from F_1 to F_3. A cycle separates F_1 from F_j exactly when it crosses
// that path an odd number of times.
std::vector<int> crossing_bits(const SigmaGraph& g) {
  const auto& map = g.map();
  std::vector<int> bits(map.num_edges(), 0);
  for (int j = 2; j <= 3; ++j) {
    std::vector<Dart> via(map.num_faces(), -1);
    std::vector<char> seen(map.num_faces(), 0);
    std::deque<FaceId> queue{g.marked(1)};
    seen[g.marked(1)] = 1;
    while (!queue.empty()) {
      const FaceId f = queue.front();
      queue.pop_front();
      for (const Dart d : map.face(f)) {
        const FaceId h = map.face_of(CombinatorialMap::twin(d));
        if (seen[h]) continue;
        seen[h] = 1;
        via[h] = d;
        queue.push_back(h);
      }
    }
    for (FaceId f = g.marked(j); f != g.marked(1); f = map.face_of(via[f])) {
      bits[CombinatorialMap::edge_of(via[f])] ^= j - 1;
    }
  }
  return bits;
}

int type_of_bits(int bits) {
  static constexpr int kType[4] = {0, 2, 3, 1};
  return kType[bits];
}

// Calls on_cycle(walk, pos, prefix) for every simple cycle in both
// orientations; pos gives each cycle vertex its index in the walk and prefix
// the crossing bits of each walk prefix.
template <class OnCycle>
void for_each_cycle(const CombinatorialMap& map, const std::vector<int>& bits,
                    NodeBudget& budget, OnCycle&& on_cycle) {
  const int nv = map.num_vertices();
  std::vector<Dart> path;
  std::vector<int> prefix{0};
  std::vector<int> pos(nv, -1);
  for (VertexId s = 0; s < nv; ++s) {
    auto dfs = [&](auto&& self, VertexId u) -> void {
      budget.tick();
      for (const Dart d : map.rotation(u)) {
        const VertexId w = map.head(d);
        const int b = prefix.back() ^ bits[CombinatorialMap::edge_of(d)];
        if (w == s) {
          if (path.empty() || CombinatorialMap::edge_of(d) != CombinatorialMap::edge_of(path.back())) {
            path.push_back(d);
            prefix.push_back(b);
            on_cycle(path, pos, prefix);
            prefix.pop_back();
            path.pop_back();
          }
        } else if (w > s && pos[w] < 0) {
          pos[w] = static_cast<int>(path.size()) + 1;
          path.push_back(d);
          prefix.push_back(b);
          self(self, w);
          prefix.pop_back();
          path.pop_back();
          pos[w] = -1;
        }
      }
    };
    pos[s] = 0;
    dfs(dfs, s);
    pos[s] = -1;
  }
}

std::vector<std::uint64_t> vertex_mask(const CombinatorialMap& map, const std::vector<Dart>& walk) {
  std::vector<std::uint64_t> mask((map.num_vertices() + 63) / 64, 0);
  for (const Dart d : walk) {
    const VertexId v = map.tail(d);
    mask[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  return mask;
}

void check_room(std::size_t stored, const OracleLimits& limits) {
  if (stored >= limits.max_cycles) {
    throw Error(ErrorCode::LimitExceeded,
                "more than " + std::to_string(limits.max_cycles) + " simple cycles");
  }
}

}  // namespace

CycleCatalog all_simple_cycles(const SigmaGraph& g, const OracleLimits& limits) {
  const auto& map = g.map();
  NodeBudget budget(limits.max_nodes);
  std::set<std::vector<EdgeId>> seen;
  std::vector<std::vector<Dart>> found;
  for_each_cycle(map, crossing_bits(g), budget, [&](const std::vector<Dart>& walk, auto&, auto&) {
    std::vector<EdgeId> key;
    for (const Dart d : walk) key.push_back(CombinatorialMap::edge_of(d));
    std::sort(key.begin(), key.end());
    if (!seen.insert(std::move(key)).second) return;
    check_room(found.size(), limits);
    found.push_back(walk);
  });

  CycleCatalog catalog;
  catalog.enumerated = found.size();
  for (auto& walk : found) {
    catalog.masks.push_back(vertex_mask(map, walk));
    auto loop = make_loop(map, std::move(walk));
    catalog.types.push_back(classify_loop(g, loop));
    catalog.cycles.push_back(std::move(loop));
  }
  return catalog;
}

CycleCatalog packing_catalog(const SigmaGraph& g, const OracleLimits& limits) {
  const auto& map = g.map();
  const auto bits = crossing_bits(g);
  NodeBudget budget(limits.max_nodes);
  std::set<std::pair<int, std::vector<std::uint64_t>>> seen;
  std::vector<std::pair<int, std::vector<Dart>>> kept;
  std::size_t met = 0;

  for_each_cycle(map, bits, budget, [&](const std::vector<Dart>& walk, const std::vector<int>& pos,
                                        const std::vector<int>& prefix) {
    ++met;
    const int total = prefix.back();
    const int type = type_of_bits(total);
    if (type == 0) return;
    const int len = static_cast<int>(walk.size());
    for (int k = 0; k < len && len > 1; ++k) {
      const Dart out = walk[k];
      const Dart in = walk[(k + len - 1) % len];
      for (const Dart d : map.rotation(map.tail(out))) {
        const int m = pos[map.head(d)];
        const EdgeId e = CombinatorialMap::edge_of(d);
        if (m < 0 || e == CombinatorialMap::edge_of(out) || e == CombinatorialMap::edge_of(in)) continue;
        if (m == k) {
          if (type_of_bits(bits[e]) == type) return;
          continue;
        }
        if (m < k) continue;
        const int cut = prefix[m] ^ prefix[k] ^ bits[e];
        if (m - k + 1 < len && type_of_bits(cut) == type) return;
        if (len - (m - k) + 1 < len && type_of_bits(cut ^ total) == type) return;
      }
    }
    if (!seen.emplace(type, vertex_mask(map, walk)).second) return;
    check_room(kept.size(), limits);
    kept.emplace_back(type, walk);
  });

  CycleCatalog catalog;
  catalog.enumerated = met / 2;
  for (auto& [type, walk] : kept) {
    catalog.masks.push_back(vertex_mask(map, walk));
    catalog.cycles.push_back(make_loop(map, std::move(walk)));
    catalog.types.push_back(LoopType::Type(type));
  }
  return catalog;
}

int max_disjoint_type(const CycleCatalog& catalog, int i, const OracleLimits& limits) {
  std::vector<std::size_t> cands;
  for (std::size_t c = 0; c < catalog.size(); ++c) {
    if (catalog.types[c].type == i) cands.push_back(c);
  }
  std::stable_sort(cands.begin(), cands.end(), [&](std::size_t a, std::size_t b) {
    return catalog.cycles[a].darts.size() < catalog.cycles[b].darts.size();
  });
  NodeBudget budget(limits.max_nodes);
  int best = 0;
  auto rec = [&](auto&& self, const std::vector<std::size_t>& pool, int count) -> void {
    budget.tick();
    best = std::max(best, count);
    if (count + static_cast<int>(pool.size()) <= best) return;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (count + static_cast<int>(pool.size() - p) <= best) return;
      std::vector<std::size_t> rest;
      for (std::size_t q = p + 1; q < pool.size(); ++q) {
        if (!catalog.conflict(pool[p], pool[q])) rest.push_back(pool[q]);
      }
      self(self, rest, count + 1);
    }
  };
  rec(rec, cands, 0);
  return best;
}

int max_disjoint_type(const SigmaGraph& g, int i, const OracleLimits& limits) {
  return max_disjoint_type(packing_catalog(g, limits), i, limits);
}

std::vector<LaminationType> lamination_space_bruteforce(const CycleCatalog& catalog,
                                                        const OracleLimits& limits) {
  std::array<int, 3> top{};
  for (int i = 1; i <= 3; ++i) top[i - 1] = max_disjoint_type(catalog, i, limits);
  NodeBudget budget(limits.max_nodes);

  using Pools = std::array<std::vector<std::size_t>, 3>;
  Pools all;
  for (std::size_t c = 0; c < catalog.size(); ++c) {
    if (!catalog.types[c].contractible()) all[catalog.types[c].type - 1].push_back(c);
  }

  auto feasible = [&](auto&& self, std::array<int, 3> need, const Pools& pools) -> bool {
    budget.tick();
    int pick = -1;
    for (int j = 0; j < 3; ++j) {
      if (need[j] == 0) continue;
      if (static_cast<int>(pools[j].size()) < need[j]) return false;
      if (pick < 0 || pools[j].size() < pools[pick].size()) pick = j;
    }
    if (pick < 0) return true;
    const auto& mine = pools[pick];
    for (std::size_t p = 0; p + need[pick] <= mine.size(); ++p) {
      const std::size_t c = mine[p];
      Pools next;
      for (int j = 0; j < 3; ++j) {
        const std::size_t from = j == pick ? p + 1 : 0;
        for (std::size_t q = from; q < pools[j].size(); ++q) {
          if (!catalog.conflict(c, pools[j][q])) next[j].push_back(pools[j][q]);
        }
      }
      auto less = need;
      --less[pick];
      if (self(self, less, next)) return true;
    }
    return false;
  };

  for (auto& pool : all) {
    std::stable_sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
      return catalog.cycles[a].darts.size() < catalog.cycles[b].darts.size();
    });
  }

  // The space is downward closed, so a triple is only worth a search when
  // each of its lower neighbours is already known to be realised.
  const int s1 = top[1] + 1, s2 = top[2] + 1;
  std::vector<char> ok((top[0] + 1) * s1 * s2, 0);
  auto at = [&](int x, int y, int z) -> char& { return ok[(x * s1 + y) * s2 + z]; };
  for (int x = 0; x <= top[0]; ++x) {
    for (int y = 0; y <= top[1]; ++y) {
      for (int z = 0; z <= top[2]; ++z) {
        if ((x > 0 && !at(x - 1, y, z)) || (y > 0 && !at(x, y - 1, z)) ||
            (z > 0 && !at(x, y, z - 1))) {
          continue;
        }
        at(x, y, z) = feasible(feasible, {x, y, z}, all);
      }
    }
  }

  std::vector<LaminationType> out;
  for (int x = 0; x <= top[0]; ++x)
    for (int y = 0; y <= top[1]; ++y)
      for (int z = 0; z <= top[2]; ++z)
        if (at(x, y, z)) out.push_back({x, y, z});
  return out;
}

std::vector<LaminationType> lamination_space_bruteforce(const SigmaGraph& g,
                                                        const OracleLimits& limits) {
  return lamination_space_bruteforce(packing_catalog(g, limits), limits);
}

}  // namespace pants
