#include "pants/blocks.hpp"

#include <algorithm>
#include <set>

#include "pants/error.hpp"

namespace pants {

namespace {

std::string idx(int i) { return std::to_string(i); }

std::string f_label(bool primed, int k, int i, int j) {
  return std::string(primed ? "f'^" : "f^") + idx(k) + "_{" + idx(i) + "," + idx(j) + "}";
}

EdgeId edge_between(const PolygonComplex::Built& built, int u, int v) {
  return CombinatorialMap::edge_of(built.dart(u, v));
}

LabeledBlock finish(const PolygonComplex& complex, int outer_u, int outer_v,
                    const std::vector<std::pair<std::string, std::pair<int, int>>>& names) {
  auto built = complex.build();
  LabeledBlock block;
  for (const auto& [name, uv] : names) block.labels[name] = edge_between(built, uv.first, uv.second);
  // Polygons sit on the twin side of their own darts, so the dart of a
  // boundary side lies on the outer face.
  block.outer_face = built.map.face_of(built.dart(outer_u, outer_v));
  block.map = std::move(built.map);
  return block;
}

}  // namespace

bool BlockParams::valid() const {
  for (int i = 1; i <= 3; ++i) {
    if (l(i) < 0 || n(i) < 0) return false;
    if (n(i) > std::min(l(next_index(i)), l(prev_index(i)))) return false;
  }
  return true;
}

std::string BlockParams::str() const {
  std::string out = "(";
  const auto v = as_array();
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? "," : "") + std::to_string(v[j]);
  return out + ")";
}

LabeledBlock connector() {
  PolygonComplex c;
  const int a1 = c.add_vertex(), a2 = c.add_vertex(), a3 = c.add_vertex();
  c.add_polygon({a1, a2, a3});
  return finish(c, a1, a2, {{"e'1", {a1, a2}}, {"e'2", {a2, a3}}, {"e'3", {a3, a1}}});
}

LabeledBlock leg(int i, int l) {
  if (l < 0) throw Error(ErrorCode::NegativeParameter, "leg length " + idx(l));
  if (i < 1 || i > 3) throw Error(ErrorCode::BadMarkedIndex, "leg index " + idx(i));
  if (l == 0) {
    LabeledBlock block;
    block.map = CombinatorialMap::build({{0}, {1}});
    block.outer_face = 0;
    block.labels["E" + idx(i)] = 0;
    block.labels["e" + idx(i)] = 0;
    return block;
  }
  PolygonComplex c;
  std::vector<int> a(l + 1), b(l + 1);
  for (int k = 0; k <= l; ++k) {
    a[k] = c.add_vertex();
    b[k] = c.add_vertex();
  }
  std::vector<std::pair<std::string, std::pair<int, int>>> names;
  for (int k = 1; k <= l; ++k) {
    c.add_polygon({b[k - 1], a[k - 1], a[k], b[k]});
    names.push_back({f_label(false, k, i, next_index(i)), {b[k - 1], b[k]}});
    names.push_back({f_label(false, k, i, prev_index(i)), {a[k - 1], a[k]}});
  }
  names.push_back({"E" + idx(i), {a[l], b[l]}});
  names.push_back({"e" + idx(i), {a[0], b[0]}});
  return finish(c, a[l], b[l], names);
}

LabeledBlock web(int i, int n) {
  if (n < 0) throw Error(ErrorCode::NegativeParameter, "web size " + idx(n));
  if (i < 1 || i > 3) throw Error(ErrorCode::BadMarkedIndex, "web index " + idx(i));
  if (n == 0) return {};
  PolygonComplex c;
  std::map<std::pair<int, int>, int> w;
  auto at = [&](int x, int y) {
    auto [it, fresh] = w.try_emplace({x, y}, 0);
    if (fresh) it->second = c.add_vertex();
    return it->second;
  };
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col + row <= n + 1; ++col) {
      c.add_polygon({at(col - 1, row - 1), at(col, row - 1), at(col, row), at(col - 1, row)});
    }
  }
  const int j = next_index(i);
  const int k = prev_index(i);
  std::vector<std::pair<std::string, std::pair<int, int>>> names;
  for (int m = 1; m <= n; ++m) {
    names.push_back({f_label(true, m, j, k), {at(m - 1, 0), at(m, 0)}});
    names.push_back({f_label(true, m, k, j), {at(0, m - 1), at(0, m)}});
  }
  return finish(c, at(0, 0), at(1, 0), names);
}

GammaComplex gamma_complex(const BlockParams& t) {
  if (!t.valid()) throw Error(ErrorCode::InvariantViolated, "block parameters " + t.str());
  GammaComplex out;
  auto& c = out.complex;
  std::array<int, 4> corner{};
  for (int i = 1; i <= 3; ++i) corner[i] = c.add_vertex();
  c.add_polygon({corner[1], corner[2], corner[3]});

  // Leg i hangs off the triangle side A_i A_{i+1}: a runs along the A_i side,
  // b along the A_{i+1} side.
  std::array<std::vector<int>, 4> a, b;
  for (int i = 1; i <= 3; ++i) {
    const int l = t.l(i);
    a[i].push_back(corner[i]);
    b[i].push_back(corner[next_index(i)]);
    for (int k = 1; k <= l; ++k) {
      a[i].push_back(c.add_vertex());
      b[i].push_back(c.add_vertex());
      c.add_polygon({b[i][k - 1], a[i][k - 1], a[i][k], b[i][k]});
    }
    out.big_e[i - 1] = {a[i][l], b[i][l]};
  }

  // Web i fills the corner A_{i+2} between leg i+1 (its b side) and leg i+2
  // (its a side).
  for (int i = 1; i <= 3; ++i) {
    const int n = t.n(i);
    if (n == 0) continue;
    const int below = next_index(i);
    const int left = prev_index(i);
    std::map<std::pair<int, int>, int> w;
    auto at = [&](int x, int y) {
      if (y == 0) return b[below][x];
      if (x == 0) return a[left][y];
      auto [it, fresh] = w.try_emplace({x, y}, 0);
      if (fresh) it->second = c.add_vertex();
      return it->second;
    };
    for (int row = 1; row <= n; ++row) {
      for (int col = 1; col + row <= n + 1; ++col) {
        c.add_polygon({at(col - 1, row - 1), at(col, row - 1), at(col, row), at(col - 1, row)});
      }
    }
  }
  return out;
}

LabeledBlock gamma(const BlockParams& t) {
  const auto gc = gamma_complex(t);
  auto built = gc.complex.build();
  LabeledBlock block;
  std::set<EdgeId> big;
  for (int i = 1; i <= 3; ++i) {
    const auto [u, v] = gc.big_e[i - 1];
    const EdgeId e = edge_between(built, u, v);
    block.labels["E" + idx(i)] = e;
    big.insert(e);
  }
  for (const auto& [u, v, g] : gc.complex.boundary_sides()) {
    const EdgeId e = edge_between(built, u, v);
    if (!big.count(e)) block.seam.push_back(e);
  }
  std::sort(block.seam.begin(), block.seam.end());
  const auto [u0, v0] = gc.big_e[0];
  block.outer_face = built.map.face_of(built.dart(u0, v0));
  block.map = std::move(built.map);
  return block;
}

Pillowcase pillowcase_with_mirror(const BlockParams& t) {
  const auto gc = gamma_complex(t);
  const auto& half = gc.complex;
  const int n = half.num_vertices();

  using Key = std::tuple<int, int, int>;
  auto key = [](int u, int v) { return Key{std::min(u, v), std::max(u, v), 0}; };
  std::set<Key> big;
  for (const auto& [u, v] : gc.big_e) big.insert(key(u, v));
  std::set<Key> seam;
  std::vector<char> on_boundary(n, 0);
  for (const auto& [u, v, g] : half.boundary_sides()) {
    on_boundary[u] = on_boundary[v] = 1;
    if (!big.count(key(u, v))) seam.insert(key(u, v));
  }

  // Groups: 0 = first copy, 1 = mirror copy, 2 = shared seam edge.
  PolygonComplex whole;
  for (int v = 0; v < n; ++v) whole.add_vertex();
  std::vector<int> copy(n);
  for (int v = 0; v < n; ++v) copy[v] = on_boundary[v] ? v : whole.add_vertex();

  for (const auto& p : half.polygons()) {
    const std::size_t m = p.corners.size();
    std::vector<int> groups(m);
    for (std::size_t j = 0; j < m; ++j) {
      groups[j] = seam.count(key(p.corners[j], p.corners[(j + 1) % m])) ? 2 : 0;
    }
    whole.add_polygon(p.corners, groups);
  }
  for (const auto& p : half.polygons()) {
    const std::size_t m = p.corners.size();
    std::vector<int> corners(p.corners.rbegin(), p.corners.rend());
    std::vector<int> groups(m);
    for (std::size_t j = 0; j < m; ++j) {
      groups[j] = seam.count(key(corners[j], corners[(j + 1) % m])) ? 2 : 1;
    }
    for (auto& v : corners) v = copy[v];
    whole.add_polygon(std::move(corners), std::move(groups));
  }

  auto built = whole.build();
  std::array<FaceId, 3> marked{};
  for (int i = 0; i < 3; ++i) {
    const auto [u, v] = gc.big_e[i];
    marked[i] = built.map.face_of(built.dart(u, v, 0));
  }

  std::vector<Dart> mirror(built.map.num_darts(), -1);
  for (const auto& [k, d] : built.dart_of) {
    const auto [u, v, g] = k;
    const int image_group = g == 2 ? 2 : 1 - g;
    // Vertices of the mirror copy are numbered past n; map them back.
    auto flip = [&](int x) {
      if (x < n) return copy[x];
      const auto it = std::find(copy.begin(), copy.end(), x);
      return static_cast<int>(it - copy.begin());
    };
    mirror[d] = built.dart(flip(u), flip(v), image_group);
  }
  return {SigmaGraph(std::move(built.map), marked), std::move(mirror)};
}

SigmaGraph pillowcase(const BlockParams& t) { return pillowcase_with_mirror(t).graph; }

SigmaVector pillowcase_sigma(const BlockParams& t) {
  SigmaVector s;
  for (int i = 1; i <= 3; ++i) {
    const int j = next_index(i);
    const int k = prev_index(i);
    const int excess = t.n(i) - std::max(t.n(j), t.n(k));
    // floor division; excess may be negative.
    const int half = excess >= 0 ? excess / 2 : -((-excess + 1) / 2);
    s.mu[i - 1] = 1 + t.l(i) + std::max(0, half);
    s.delta[i - 1] = 1 + t.l(j) + t.l(k) - t.n(i);
  }
  return s;
}

}  // namespace pants
