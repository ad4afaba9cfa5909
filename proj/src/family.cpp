#include "pants/family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "pants/error.hpp"

namespace pants {

namespace {

Point add(Point p, Point q, double s = 1) { return {p.x + s * q.x, p.y + s * q.y}; }

Point unit(Point v) {
  const double n = std::hypot(v.x, v.y);
  return n < 1e-9 ? Point{0, 1} : Point{v.x / n, v.y / n};
}

Point rotate(Point v, double a) {
  return {v.x * std::cos(a) - v.y * std::sin(a), v.x * std::sin(a) + v.y * std::cos(a)};
}

bool crossed(const FamilySpec& s, int i) {
  for (int j = 1; j <= 3; ++j) {
    if (j != i && s.depth_between(i, j) > 0) return true;
  }
  return false;
}

}  // namespace

void FamilySpec::validate() const {
  int empty = 0;
  for (int i = 1; i <= 3; ++i) {
    if (count(i) < 0 || p(i) < 0) {
      throw Error(ErrorCode::InvariantViolated, "negative entry in " + str());
    }
    if (count(i) == 0) ++empty;
  }
  if (empty > 1) throw Error(ErrorCode::InvariantViolated, "two holes without circles in " + str());
  for (int k = 1; k <= 3; ++k) {
    if (p(k) > std::min(count(next_index(k)), count(prev_index(k)))) {
      throw Error(ErrorCode::InvariantViolated, "depth p_" + std::to_string(k) + " exceeds a family size");
    }
  }
  if (p(1) > 0 && p(2) > 0 && p(3) > 0) {
    throw Error(ErrorCode::OverlappingCrossings, "all three families cross in " + str());
  }
  for (int i = 1; i <= 3; ++i) {
    if (!cap(i)) continue;
    if (count(i) == 0) throw Error(ErrorCode::InvariantViolated, "cap around an empty family");
    if (crossed(*this, i)) throw Error(ErrorCode::InvariantViolated, "cap around a crossed family");
  }
}

std::string FamilySpec::str() const {
  std::string out = "counts=(" + std::to_string(counts[0]) + "," + std::to_string(counts[1]) + "," +
                    std::to_string(counts[2]) + ") p=(" + std::to_string(depths[0]) + "," +
                    std::to_string(depths[1]) + "," + std::to_string(depths[2]) + ")";
  if (caps[0] || caps[1] || caps[2]) {
    out += " caps=";
    for (int i = 1; i <= 3; ++i) {
      if (cap(i)) out += std::to_string(i);
    }
  }
  if (law == CrossingLaw::CrossOnly) out += " cross-only";
  return out;
}

FamilyDrawing family_drawing(const FamilySpec& spec) {
  spec.validate();
  int widest = 0;
  for (int i = 1; i <= 3; ++i) widest = std::max({widest, spec.count(i), spec.p(i)});
  const double radius = 8.0 * widest + 10;
  const double slack = spec.law == CrossingLaw::TouchDeepest ? 1.0 : 1.5;
  auto gap = [&](int i, int j) { return 2 * radius - spec.depth_between(i, j) - slack; };

  std::vector<int> present;
  for (int i = 1; i <= 3; ++i) {
    if (spec.count(i) > 0) present.push_back(i);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= 3; ++k) {
    if (spec.p(k) > 0) pairs.emplace_back(next_index(k), prev_index(k));
  }

  std::array<Point, 4> center{};
  int hub = 0;
  if (pairs.size() == 2) {
    for (int i = 1; i <= 3; ++i) {
      const bool first = pairs[0].first == i || pairs[0].second == i;
      const bool second = pairs[1].first == i || pairs[1].second == i;
      if (first && second) hub = i;
    }
    const int left = pairs[0].first == hub ? pairs[0].second : pairs[0].first;
    const int right = pairs[1].first == hub ? pairs[1].second : pairs[1].first;
    center[left] = {-gap(hub, left), 0};
    center[right] = {gap(hub, right), 0};
  } else if (pairs.size() == 1) {
    const auto [x, y] = pairs[0];
    const double d = gap(x, y);
    center[y] = {d, 0};
    center[6 - x - y] = {d / 2, -6 * radius};
  } else {
    const double side = 3 * radius;
    center[1] = {0, 0};
    center[2] = {side, 0};
    center[3] = {side / 2, -side * std::sqrt(3.0) / 2};
  }

  std::array<Point, 4> away{};
  for (const int i : present) {
    Point mean{0, 0};
    int others = 0;
    for (const int j : present) {
      if (j == i) continue;
      mean = add(mean, center[j]);
      ++others;
    }
    away[i] = (i == hub || others == 0)
                  ? Point{0, 1}
                  : unit(add(center[i], Point{mean.x / others, mean.y / others}, -1));
  }

  FamilyDrawing out;
  auto& arr = out.arrangement;
  for (int i = 1; i <= 3; ++i) {
    out.at_infinity[i - 1] = spec.count(i) == 0;
    out.holes[i - 1] = center[i];
  }
  for (const int i : present) {
    for (int a = 1; a <= spec.count(i); ++a) arr.add_circle(center[i], radius - a);
    if (spec.cap(i)) arr.add_circle(add(center[i], away[i], -1), radius);
  }

  // Circles that touch a crossing partner hang together through it; the
  // remaining inner circles are tied to their neighbour by radial segments.
  for (const int i : present) {
    int deepest = 0;
    for (const int j : present) {
      if (j != i) deepest = std::max(deepest, spec.depth_between(i, j));
    }
    const Point dir = rotate(away[i], std::acos(-1.0) / 4);
    for (int a = std::max(1, deepest); a < spec.count(i); ++a) {
      arr.add_segment(add(center[i], dir, radius - a), add(center[i], dir, radius - a - 1));
    }
  }

  // Families in different pieces are joined along the line of their centers.
  std::array<int, 4> piece{0, 1, 2, 3};
  auto find = [&](int i) {
    while (piece[i] != i) i = piece[i];
    return i;
  };
  for (const auto& [x, y] : pairs) piece[find(x)] = find(y);
  auto reach = [&](int i, Point u) {
    if (!spec.cap(i)) return radius - 1;
    const double along = u.x * away[i].x + u.y * away[i].y;
    return -along + std::sqrt(along * along + radius * radius - 1);
  };
  for (std::size_t k = 1; k < present.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      const int x = present[j];
      const int y = present[k];
      if (find(x) == find(y)) continue;
      const Point u = unit(add(center[y], center[x], -1));
      arr.add_segment(add(center[x], u, reach(x, u)), add(center[y], u, -reach(y, Point{-u.x, -u.y})));
      piece[find(x)] = find(y);
    }
  }
  return out;
}

SigmaGraph family_graph(const FamilySpec& spec) {
  const auto drawing = family_drawing(spec);
  auto built = drawing.arrangement.build();
  std::array<FaceId, 3> marked{};
  for (int i = 0; i < 3; ++i) {
    marked[i] = drawing.at_infinity[i] ? built.outer_face() : built.face_at(drawing.holes[i]);
  }
  return SigmaGraph(std::move(built.map), marked);
}

}  // namespace pants
