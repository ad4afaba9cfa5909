#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pants {

using Dart = int;
using EdgeId = int;
using VertexId = int;
using FaceId = int;

/// Graph embedded on the sphere, encoded as a rotation system.
///
/// Darts come in twin pairs (2e, 2e+1) for edge e. Each vertex lists its
/// outgoing darts in counterclockwise order. The face successor of a dart d
/// is the rotation successor of twin(d) at the head of d; faces are the
/// orbits of that permutation, numbered by their smallest dart id and each
/// stored starting from that dart.
///
/// Instances are immutable once built.
class CombinatorialMap {
 public:
  /// Throws Error with MalformedRotation, Disconnected or NonSpherical.
  static CombinatorialMap build(std::vector<std::vector<Dart>> vertex_rotations);

  static constexpr Dart twin(Dart d) noexcept { return d ^ 1; }
  static constexpr EdgeId edge_of(Dart d) noexcept { return d >> 1; }

  int num_darts() const noexcept { return static_cast<int>(tail_.size()); }
  int num_edges() const noexcept { return num_darts() / 2; }
  int num_vertices() const noexcept { return static_cast<int>(rotations_.size()); }
  int num_faces() const noexcept { return static_cast<int>(faces_.size()); }

  VertexId tail(Dart d) const { return tail_[d]; }
  VertexId head(Dart d) const { return tail_[twin(d)]; }
  Dart rot_next(Dart d) const { return rot_next_[d]; }
  Dart rot_prev(Dart d) const { return rot_prev_[d]; }
  Dart face_next(Dart d) const { return rot_next_[twin(d)]; }
  FaceId face_of(Dart d) const { return face_of_[d]; }

  std::span<const Dart> rotation(VertexId v) const;
  std::span<const Dart> face(FaceId f) const { return faces_[f]; }
  const std::vector<std::vector<Dart>>& faces() const noexcept { return faces_; }
  const std::vector<std::vector<Dart>>& rotations() const noexcept { return rotations_; }

  int vertex_degree(VertexId v) const { return static_cast<int>(rotation(v).size()); }
  int face_degree(FaceId f) const { return static_cast<int>(faces_[f].size()); }

  /// Faces whose boundary walk passes through v, ascending. Throws UnknownVertex.
  std::vector<FaceId> faces_sharing_vertex(VertexId v) const;

  /// Distinct vertices on the boundary of f, in order of first appearance.
  std::vector<VertexId> face_vertices(FaceId f) const;

  int euler_characteristic() const noexcept {
    return num_vertices() - num_edges() + num_faces();
  }

  bool operator==(const CombinatorialMap& other) const {
    return rotations_ == other.rotations_;
  }

 private:
  CombinatorialMap() = default;

  std::vector<std::vector<Dart>> rotations_;
  std::vector<VertexId> tail_;
  std::vector<Dart> rot_next_;
  std::vector<Dart> rot_prev_;
  std::vector<FaceId> face_of_;
  std::vector<std::vector<Dart>> faces_;
};

}  // namespace pants
