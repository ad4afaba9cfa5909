#pragma once

#include <array>
#include <memory>
#include <vector>

#include "pants/combmap.hpp"

namespace pants {

/// Marked-face indices are 1-based and taken modulo 3: next_index(3) == 1.
constexpr int next_index(int i) noexcept { return i % 3 + 1; }
constexpr int prev_index(int i) noexcept { return (i + 1) % 3 + 1; }

/// Face distance where two faces sharing a vertex are adjacent.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const CombinatorialMap& map);

  int size() const noexcept { return n_; }
  int operator()(FaceId a, FaceId b) const { return dist_[static_cast<std::size_t>(a) * n_ + b]; }
  /// Largest distance from f to any face.
  int eccentricity(FaceId f) const;

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

/// A spherical map with three distinct marked faces (the punctures).
class SigmaGraph {
 public:
  SigmaGraph(CombinatorialMap map, std::array<FaceId, 3> marked);

  const CombinatorialMap& map() const noexcept { return *map_; }
  const std::array<FaceId, 3>& marked() const noexcept { return marked_; }
  /// Marked face F_i for i in 1..3. Throws BadMarkedIndex.
  FaceId marked(int i) const;
  /// 1..3 when f is a marked face, 0 otherwise.
  int marked_index_of(FaceId f) const noexcept;
  const DistanceMatrix& distances() const noexcept { return *dist_; }
  /// d_i: the distance between the two marked faces other than F_i.
  int delta(int i) const;

 private:
  std::shared_ptr<const CombinatorialMap> map_;
  std::array<FaceId, 3> marked_;
  std::shared_ptr<const DistanceMatrix> dist_;
};

/// Throws BadFaceIndex or DuplicateMarkedFace.
SigmaGraph make_sigma_graph(CombinatorialMap map, FaceId f1, FaceId f2, FaceId f3);

/// Vertex-simple closed walk together with the two face sets it separates.
/// side_a holds the faces lying along the loop's darts (face_of(d)); side_b
/// the faces along their twins.
struct SimpleLoop {
  std::vector<Dart> darts;
  std::vector<VertexId> vertices;
  std::vector<FaceId> side_a;
  std::vector<FaceId> side_b;

  /// Sorted edge ids; the canonical identity of the loop.
  std::vector<EdgeId> edge_set() const;
  bool same_edges(const SimpleLoop& other) const { return edge_set() == other.edge_set(); }
  bool shares_vertex(const SimpleLoop& other) const;
};

/// Validates the walk (NotClosed, NotSimple) and fills vertices and sides.
SimpleLoop make_loop(const CombinatorialMap& map, std::vector<Dart> darts);

struct Hemispheres {
  std::vector<FaceId> side_a;
  std::vector<FaceId> side_b;
};

/// Flood fill across edges not on the loop. Throws NotClosed or NotSimple.
Hemispheres hemispheres(const CombinatorialMap& map, std::span<const Dart> darts);

struct LoopType {
  /// 0 for contractible, otherwise the isolated marked index.
  int type = 0;

  bool contractible() const noexcept { return type == 0; }
  static LoopType Contractible() { return {0}; }
  static LoopType Type(int i) { return {i}; }
  bool operator==(const LoopType&) const = default;
};

LoopType classify_loop(const SigmaGraph& g, const SimpleLoop& loop);
LoopType classify_sides(const SigmaGraph& g, std::span<const FaceId> side_a,
                        std::span<const FaceId> side_b);

/// { F : d(F, F_i) = k }, ascending.
std::vector<FaceId> layer(const SigmaGraph& g, int i, int k);

/// Decomposition of the boundary of { F : d(F, F_i) < k } into vertex-simple
/// loops, ordered by smallest dart. Each loop runs with the explored region on
/// side_a. Throws EmptyLayer when no face lies at distance k.
std::vector<SimpleLoop> boundary_loops(const SigmaGraph& g, int i, int k);

}  // namespace pants
