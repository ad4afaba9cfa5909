#include "pants/combmap.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pants/error.hpp"

namespace pants {

CombinatorialMap CombinatorialMap::build(std::vector<std::vector<Dart>> vertex_rotations) {
  CombinatorialMap map;
  std::size_t total = 0;
  for (const auto& rot : vertex_rotations) {
    if (rot.empty()) throw Error(ErrorCode::MalformedRotation, "vertex with empty rotation");
    total += rot.size();
  }
  if (total == 0) throw Error(ErrorCode::MalformedRotation, "map has no darts");
  if (total % 2 != 0) throw Error(ErrorCode::MalformedRotation, "odd number of darts");

  const int n = static_cast<int>(total);
  map.tail_.assign(n, -1);
  map.rot_next_.assign(n, -1);
  map.rot_prev_.assign(n, -1);
  for (int v = 0; v < static_cast<int>(vertex_rotations.size()); ++v) {
    const auto& rot = vertex_rotations[v];
    for (std::size_t j = 0; j < rot.size(); ++j) {
      const Dart d = rot[j];
      if (d < 0 || d >= n) {
        throw Error(ErrorCode::MalformedRotation, "dart " + std::to_string(d) + " out of range");
      }
      if (map.tail_[d] != -1) {
        throw Error(ErrorCode::MalformedRotation, "dart " + std::to_string(d) + " listed twice");
      }
      map.tail_[d] = v;
      const Dart next = rot[(j + 1) % rot.size()];
      map.rot_next_[d] = next;
    }
  }
  for (Dart d = 0; d < n; ++d) map.rot_prev_[map.rot_next_[d]] = d;
  map.rotations_ = std::move(vertex_rotations);

  // Connectivity over rotation + twin.
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    ++reached;
    for (const Dart e : {twin(d), map.rot_next_[d], map.rot_prev_[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "map is not connected");

  map.face_of_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (map.face_of_[d] != -1) continue;
    const FaceId f = static_cast<FaceId>(map.faces_.size());
    std::vector<Dart> orbit;
    Dart cur = d;
    do {
      map.face_of_[cur] = f;
      orbit.push_back(cur);
      cur = map.face_next(cur);
    } while (cur != d);
    map.faces_.push_back(std::move(orbit));
  }

  if (map.euler_characteristic() != 2) {
    throw Error(ErrorCode::NonSpherical,
                "V - E + F = " + std::to_string(map.euler_characteristic()) + ", expected 2");
  }
  return map;
}

std::span<const Dart> CombinatorialMap::rotation(VertexId v) const {
  if (v < 0 || v >= num_vertices()) {
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  }
  return rotations_[v];
}

std::vector<FaceId> CombinatorialMap::faces_sharing_vertex(VertexId v) const {
  std::vector<FaceId> out;
  for (const Dart d : rotation(v)) out.push_back(face_of_[d]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> CombinatorialMap::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  for (const Dart d : faces_[f]) {
    if (std::find(out.begin(), out.end(), tail_[d]) == out.end()) out.push_back(tail_[d]);
  }
  return out;
}

}  // namespace pants
