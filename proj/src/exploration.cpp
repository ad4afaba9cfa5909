#include "pants/exploration.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pants/error.hpp"

namespace pants {

namespace {

std::vector<std::vector<FaceId>> vertex_sharing_adjacency(const CombinatorialMap& map) {
  std::vector<std::vector<FaceId>> adj(map.num_faces());
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    const auto around = map.faces_sharing_vertex(v);
    for (const FaceId a : around) {
      for (const FaceId b : around) {
        if (a != b) adj[a].push_back(b);
      }
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

void check_walk(const CombinatorialMap& map, std::span<const Dart> darts) {
  if (darts.empty()) throw Error(ErrorCode::NotClosed, "empty walk");
  for (const Dart d : darts) {
    if (d < 0 || d >= map.num_darts()) {
      throw Error(ErrorCode::NotClosed, "dart " + std::to_string(d) + " out of range");
    }
  }
  for (std::size_t j = 0; j < darts.size(); ++j) {
    const Dart next = darts[(j + 1) % darts.size()];
    if (map.head(darts[j]) != map.tail(next)) {
      throw Error(ErrorCode::NotClosed, "walk breaks after dart " + std::to_string(darts[j]));
    }
  }
  std::vector<VertexId> tails;
  std::vector<EdgeId> edges;
  for (const Dart d : darts) {
    tails.push_back(map.tail(d));
    edges.push_back(CombinatorialMap::edge_of(d));
  }
  std::sort(tails.begin(), tails.end());
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(tails.begin(), tails.end()) != tails.end() ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::NotSimple, "walk revisits a vertex or an edge");
  }
}

}  // namespace

DistanceMatrix::DistanceMatrix(const CombinatorialMap& map) : n_(map.num_faces()) {
  const auto adj = vertex_sharing_adjacency(map);
  dist_.assign(static_cast<std::size_t>(n_) * n_, -1);
  std::deque<FaceId> queue;
  for (FaceId src = 0; src < n_; ++src) {
    int* row = &dist_[static_cast<std::size_t>(src) * n_];
    row[src] = 0;
    queue.assign(1, src);
    while (!queue.empty()) {
      const FaceId f = queue.front();
      queue.pop_front();
      for (const FaceId g : adj[f]) {
        if (row[g] == -1) {
          row[g] = row[f] + 1;
          queue.push_back(g);
        }
      }
    }
  }
}

int DistanceMatrix::eccentricity(FaceId f) const {
  int best = 0;
  for (FaceId g = 0; g < n_; ++g) best = std::max(best, (*this)(f, g));
  return best;
}

SigmaGraph::SigmaGraph(CombinatorialMap map, std::array<FaceId, 3> marked)
    : map_(std::make_shared<const CombinatorialMap>(std::move(map))), marked_(marked) {
  for (const FaceId f : marked_) {
    if (f < 0 || f >= map_->num_faces()) {
      throw Error(ErrorCode::BadFaceIndex, "face " + std::to_string(f) + " not in [0, " +
                                               std::to_string(map_->num_faces()) + ")");
    }
  }
  if (marked_[0] == marked_[1] || marked_[1] == marked_[2] || marked_[0] == marked_[2]) {
    throw Error(ErrorCode::DuplicateMarkedFace, "marked faces must be pairwise distinct");
  }
  dist_ = std::make_shared<const DistanceMatrix>(*map_);
}

FaceId SigmaGraph::marked(int i) const {
  if (i < 1 || i > 3) throw Error(ErrorCode::BadMarkedIndex, "index " + std::to_string(i));
  return marked_[i - 1];
}

int SigmaGraph::marked_index_of(FaceId f) const noexcept {
  for (int i = 0; i < 3; ++i) {
    if (marked_[i] == f) return i + 1;
  }
  return 0;
}

int SigmaGraph::delta(int i) const {
  return (*dist_)(marked(next_index(i)), marked(prev_index(i)));
}

SigmaGraph make_sigma_graph(CombinatorialMap map, FaceId f1, FaceId f2, FaceId f3) {
  return SigmaGraph(std::move(map), {f1, f2, f3});
}

std::vector<EdgeId> SimpleLoop::edge_set() const {
  std::vector<EdgeId> edges;
  edges.reserve(darts.size());
  for (const Dart d : darts) edges.push_back(CombinatorialMap::edge_of(d));
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool SimpleLoop::shares_vertex(const SimpleLoop& other) const {
  for (const VertexId v : vertices) {
    if (std::find(other.vertices.begin(), other.vertices.end(), v) != other.vertices.end()) {
      return true;
    }
  }
  return false;
}

Hemispheres hemispheres(const CombinatorialMap& map, std::span<const Dart> darts) {
  check_walk(map, darts);
  std::vector<char> blocked(map.num_edges(), 0);
  for (const Dart d : darts) blocked[CombinatorialMap::edge_of(d)] = 1;

  std::vector<int> side(map.num_faces(), -1);
  auto flood = [&](FaceId start, int label) {
    std::vector<FaceId> stack{start};
    side[start] = label;
    while (!stack.empty()) {
      const FaceId f = stack.back();
      stack.pop_back();
      for (const Dart d : map.face(f)) {
        if (blocked[CombinatorialMap::edge_of(d)]) continue;
        const FaceId g = map.face_of(CombinatorialMap::twin(d));
        if (side[g] == -1) {
          side[g] = label;
          stack.push_back(g);
        }
      }
    }
  };
  flood(map.face_of(darts.front()), 0);
  const FaceId other = map.face_of(CombinatorialMap::twin(darts.front()));
  if (side[other] != -1) {
    throw Error(ErrorCode::InvariantViolated, "loop does not separate the sphere");
  }
  flood(other, 1);

  Hemispheres out;
  for (FaceId f = 0; f < map.num_faces(); ++f) {
    if (side[f] == -1) throw Error(ErrorCode::InvariantViolated, "loop leaves a third region");
    (side[f] == 0 ? out.side_a : out.side_b).push_back(f);
  }
  return out;
}

SimpleLoop make_loop(const CombinatorialMap& map, std::vector<Dart> darts) {
  auto sides = hemispheres(map, darts);
  SimpleLoop loop;
  for (const Dart d : darts) loop.vertices.push_back(map.tail(d));
  loop.darts = std::move(darts);
  loop.side_a = std::move(sides.side_a);
  loop.side_b = std::move(sides.side_b);
  return loop;
}

LoopType classify_sides(const SigmaGraph& g, std::span<const FaceId> side_a,
                        std::span<const FaceId> side_b) {
  auto marked_on = [&](std::span<const FaceId> side) {
    std::vector<int> found;
    for (const FaceId f : side) {
      if (const int i = g.marked_index_of(f)) found.push_back(i);
    }
    return found;
  };
  const auto a = marked_on(side_a);
  const auto b = marked_on(side_b);
  if (a.empty() || b.empty()) return LoopType::Contractible();
  return LoopType::Type(a.size() == 1 ? a.front() : b.front());
}

LoopType classify_loop(const SigmaGraph& g, const SimpleLoop& loop) {
  if (loop.side_a.empty() && loop.side_b.empty()) {
    const auto sides = hemispheres(g.map(), loop.darts);
    return classify_sides(g, sides.side_a, sides.side_b);
  }
  return classify_sides(g, loop.side_a, loop.side_b);
}

std::vector<FaceId> layer(const SigmaGraph& g, int i, int k) {
  const FaceId center = g.marked(i);
  std::vector<FaceId> out;
  for (FaceId f = 0; f < g.map().num_faces(); ++f) {
    if (g.distances()(center, f) == k) out.push_back(f);
  }
  return out;
}

namespace {

// A closed walk through a vertex twice splits there into two closed walks.
void split_at_repeats(const CombinatorialMap& map, std::vector<Dart> walk,
                      std::vector<std::vector<Dart>>& out) {
  std::vector<int> seen(map.num_vertices(), -1);
  for (int q = 0; q < static_cast<int>(walk.size()); ++q) {
    const VertexId v = map.tail(walk[q]);
    if (seen[v] < 0) {
      seen[v] = q;
      continue;
    }
    const int p = seen[v];
    std::vector<Dart> inner(walk.begin() + p, walk.begin() + q);
    walk.erase(walk.begin() + p, walk.begin() + q);
    split_at_repeats(map, std::move(inner), out);
    split_at_repeats(map, std::move(walk), out);
    return;
  }
  out.push_back(std::move(walk));
}

}  // namespace

std::vector<SimpleLoop> boundary_loops(const SigmaGraph& g, int i, int k) {
  const auto& map = g.map();
  const FaceId center = g.marked(i);
  if (k < 1 || layer(g, i, k).empty()) {
    throw Error(ErrorCode::EmptyLayer, "no face at distance " + std::to_string(k) +
                                           " from F_" + std::to_string(i));
  }
  std::vector<char> inside(map.num_faces(), 0);
  for (FaceId f = 0; f < map.num_faces(); ++f) inside[f] = g.distances()(center, f) < k;

  auto is_boundary = [&](Dart d) {
    return inside[map.face_of(d)] && !inside[map.face_of(CombinatorialMap::twin(d))];
  };
  // The successor of a boundary dart sweeps the explored corners at its head
  // and stops at the first boundary dart, so pinch vertices split loops.
  auto successor = [&](Dart d) {
    Dart cur = map.rot_next(CombinatorialMap::twin(d));
    while (!is_boundary(cur)) cur = map.rot_next(cur);
    return cur;
  };

  std::vector<std::vector<Dart>> walks;
  std::vector<char> used(map.num_darts(), 0);
  for (Dart d = 0; d < map.num_darts(); ++d) {
    if (used[d] || !is_boundary(d)) continue;
    std::vector<Dart> walk;
    Dart cur = d;
    do {
      used[cur] = 1;
      walk.push_back(cur);
      cur = successor(cur);
    } while (cur != d);
    split_at_repeats(map, std::move(walk), walks);
  }
  for (auto& w : walks) std::rotate(w.begin(), std::min_element(w.begin(), w.end()), w.end());
  std::sort(walks.begin(), walks.end());
  std::vector<SimpleLoop> loops;
  for (auto& w : walks) loops.push_back(make_loop(map, std::move(w)));
  return loops;
}

}  // namespace pants
