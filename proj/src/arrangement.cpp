#include "pants/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "pants/error.hpp"

namespace pants {

namespace {

constexpr double kTol = 1e-7;
constexpr double kTwoPi = 2 * std::numbers::pi;

Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
double norm(Point p) { return std::hypot(p.x, p.y); }

double angle_of(Point v) {
  double a = std::atan2(v.y, v.x);
  if (a < 0) a += kTwoPi;
  return a;
}

struct Crossing {
  int curve;
  double t;
  Point p;
};

void circle_circle(int i, const Curve& c1, int j, const Curve& c2, std::vector<Crossing>& out) {
  const Point v = c2.a - c1.a;
  const double d = norm(v);
  if (d < kTol) {
    if (std::abs(c1.r - c2.r) < kTol) throw Error(ErrorCode::InvariantViolated, "coincident circles");
    return;
  }
  auto add = [&](Point p) {
    out.push_back({i, angle_of(p - c1.a), p});
    out.push_back({j, angle_of(p - c2.a), p});
  };
  const Point u = (1 / d) * v;
  if (std::abs(d - (c1.r + c2.r)) < kTol) return add(c1.a + c1.r * u);
  if (std::abs(d - std::abs(c1.r - c2.r)) < kTol) {
    return add(c1.r > c2.r ? c1.a + c1.r * u : c1.a - c1.r * u);
  }
  if (d > c1.r + c2.r || d < std::abs(c1.r - c2.r)) return;
  const double along = (d * d + c1.r * c1.r - c2.r * c2.r) / (2 * d);
  const double h = std::sqrt(std::max(0.0, c1.r * c1.r - along * along));
  const Point base = c1.a + along * u;
  const Point perp{-u.y, u.x};
  add(base + h * perp);
  add(base - h * perp);
}

// Roots s of |from + s dir - c| = r.
std::vector<double> line_circle(Point from, Point dir, const Curve& c) {
  const Point w = from - c.a;
  const double qa = dot(dir, dir);
  const double qb = 2 * dot(dir, w);
  const double qc = dot(w, w) - c.r * c.r;
  const double disc = qb * qb - 4 * qa * qc;
  if (disc < -kTol * qa) return {};
  if (disc <= kTol * qa) return {-qb / (2 * qa)};
  const double root = std::sqrt(disc);
  return {(-qb - root) / (2 * qa), (-qb + root) / (2 * qa)};
}

void circle_segment(int i, const Curve& c, int j, const Curve& s, std::vector<Crossing>& out) {
  for (const double t : line_circle(s.a, s.b - s.a, c)) {
    if (t < -kTol || t > 1 + kTol) continue;
    const Point p = s.at(std::clamp(t, 0.0, 1.0));
    out.push_back({i, angle_of(p - c.a), p});
    out.push_back({j, std::clamp(t, 0.0, 1.0), p});
  }
}

void segment_segment(int i, const Curve& s1, int j, const Curve& s2, std::vector<Crossing>& out) {
  const Point d1 = s1.b - s1.a;
  const Point d2 = s2.b - s2.a;
  const double den = cross(d1, d2);
  if (std::abs(den) < kTol) return;
  const Point w = s2.a - s1.a;
  const double t = cross(w, d2) / den;
  const double u = cross(w, d1) / den;
  if (t < -kTol || t > 1 + kTol || u < -kTol || u > 1 + kTol) return;
  const Point p = s1.at(std::clamp(t, 0.0, 1.0));
  out.push_back({i, std::clamp(t, 0.0, 1.0), p});
  out.push_back({j, std::clamp(u, 0.0, 1.0), p});
}

double speed(const Curve& c) { return c.circle ? c.r : norm(c.b - c.a); }

}  // namespace

Point Curve::at(double t) const {
  if (circle) return {a.x + r * std::cos(t), a.y + r * std::sin(t)};
  return a + t * (b - a);
}

Point Curve::tangent(double t) const {
  if (circle) return {-r * std::sin(t), r * std::cos(t)};
  return b - a;
}

int Arrangement::add_circle(Point center, double radius) {
  if (!(radius > 0)) throw Error(ErrorCode::InvariantViolated, "non-positive radius");
  curves_.push_back({true, center, center, radius});
  return static_cast<int>(curves_.size()) - 1;
}

int Arrangement::add_segment(Point a, Point b) {
  if (norm(b - a) < kTol) throw Error(ErrorCode::InvariantViolated, "degenerate segment");
  curves_.push_back({false, a, b, 0});
  return static_cast<int>(curves_.size()) - 1;
}

Arrangement::Result Arrangement::build() const {
  const int nc = static_cast<int>(curves_.size());
  if (nc == 0) throw Error(ErrorCode::Disconnected, "empty arrangement");
  std::vector<Crossing> crossings;
  for (int i = 0; i < nc; ++i) {
    const auto& c = curves_[i];
    if (!c.circle) {
      crossings.push_back({i, 0, c.a});
      crossings.push_back({i, 1, c.b});
    }
    for (int j = i + 1; j < nc; ++j) {
      const auto& d = curves_[j];
      if (c.circle && d.circle) {
        circle_circle(i, c, j, d, crossings);
      } else if (c.circle) {
        circle_segment(i, c, j, d, crossings);
      } else if (d.circle) {
        circle_segment(j, d, i, c, crossings);
      } else {
        segment_segment(i, c, j, d, crossings);
      }
    }
  }

  std::vector<Point> positions;
  std::vector<Edge> edges;
  std::vector<int> vid(crossings.size());
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const Point p = crossings[k].p;
    int found = -1;
    for (std::size_t v = 0; v < positions.size(); ++v) {
      if (norm(positions[v] - p) < 1e3 * kTol) {
        found = static_cast<int>(v);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(positions.size());
      positions.push_back(p);
    }
    vid[k] = found;
  }

  std::vector<std::vector<std::pair<double, int>>> on_curve(nc);
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    on_curve[crossings[k].curve].emplace_back(crossings[k].t, vid[k]);
  }
  for (int i = 0; i < nc; ++i) {
    auto& pts = on_curve[i];
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const auto& p, const auto& q) { return p.second == q.second; }),
              pts.end());
    if (curves_[i].circle && pts.size() > 1 && pts.front().second == pts.back().second) pts.pop_back();
    if (pts.empty()) {
      pts.emplace_back(0.0, static_cast<int>(positions.size()));
      positions.push_back(curves_[i].at(0.0));
    }
  }

  // Edges and their end vertices.
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < nc; ++i) {
    const auto& pts = on_curve[i];
    const std::size_t m = pts.size();
    const std::size_t pieces = curves_[i].circle ? m : m - 1;
    for (std::size_t k = 0; k < pieces; ++k) {
      const auto& [t0, v0] = pts[k];
      auto [t1, v1] = pts[(k + 1) % m];
      if (k + 1 == m) t1 += kTwoPi;
      edges.push_back({i, t0, t1});
      ends.emplace_back(v0, v1);
    }
  }

  const int nv = static_cast<int>(positions.size());
  std::vector<double> reach(nv, 0.01);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    const double len = speed(curves_[edge.curve]) * (edge.t1 - edge.t0);
    reach[ends[e].first] = std::min(reach[ends[e].first], 0.25 * len);
    reach[ends[e].second] = std::min(reach[ends[e].second], 0.25 * len);
  }
  // Darts leaving a vertex are ordered counterclockwise by the direction to a
  // point a short arc along their curve, which also separates tangent curves.
  std::vector<std::vector<std::pair<double, Dart>>> around(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    const auto& c = curves_[edge.curve];
    const auto [v0, v1] = ends[e];
    const double h0 = reach[v0] / speed(c);
    const double h1 = reach[v1] / speed(c);
    around[v0].emplace_back(angle_of(c.at(edge.t0 + h0) - c.at(edge.t0)), static_cast<Dart>(2 * e));
    around[v1].emplace_back(angle_of(c.at(edge.t1 - h1) - c.at(edge.t1)), static_cast<Dart>(2 * e + 1));
  }
  std::vector<std::vector<Dart>> rotations(nv);
  for (int v = 0; v < nv; ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (const auto& [angle, d] : around[v]) rotations[v].push_back(d);
  }
  return {CombinatorialMap::build(std::move(rotations)), curves_, std::move(edges),
          std::move(positions)};
}

namespace {

std::vector<std::pair<double, double>> ray_hits(Point from, Point dir, const Curve& c,
                                                const Arrangement::Edge& e) {
  std::vector<std::pair<double, double>> hits;
  if (c.circle) {
    for (const double s : line_circle(from, dir, c)) {
      if (s <= kTol) continue;
      double t = angle_of(from + s * dir - c.a);
      while (t < e.t0) t += kTwoPi;
      if (t <= e.t1) hits.emplace_back(s, t);
    }
    return hits;
  }
  const Point d = c.b - c.a;
  const double den = cross(dir, d);
  if (std::abs(den) < kTol) return hits;
  const Point w = c.a - from;
  const double s = cross(w, d) / den;
  const double t = cross(w, dir) / den;
  if (s > kTol && t >= e.t0 && t <= e.t1) hits.emplace_back(s, t);
  return hits;
}

}  // namespace

FaceId Arrangement::Result::face_at(Point p) const {
  std::vector<Point> dirs{{std::cos(0.3718), std::sin(0.3718)}};
  for (const Point& v : vertex_position) {
    const double a = std::atan2(v.y - p.y, v.x - p.x) + 1e-5;
    dirs.push_back({std::cos(a), std::sin(a)});
  }
  for (const Point dir : dirs) {
    double best = std::numeric_limits<double>::infinity();
    std::optional<FaceId> face;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto& c = curves[edges[e].curve];
      for (const auto& [s, t] : ray_hits(p, dir, c, edges[e])) {
        if (s >= best) continue;
        best = s;
        const Point tan = c.tangent(t);
        const Point right{tan.y, -tan.x};
        const Dart d = static_cast<Dart>(2 * e) + (dot(right, -1.0 * dir) > 0 ? 0 : 1);
        face = map.face_of(d);
      }
    }
    if (face) return *face;
  }
  throw Error(ErrorCode::InvariantViolated, "point location failed");
}

FaceId Arrangement::Result::outer_face() const {
  double lo_x = 0, hi_x = 0, hi_y = 0;
  bool first = true;
  for (const auto& c : curves) {
    const double r = c.circle ? c.r : 0;
    for (const Point q : {c.a, c.b}) {
      lo_x = first ? q.x - r : std::min(lo_x, q.x - r);
      hi_x = first ? q.x + r : std::max(hi_x, q.x + r);
      hi_y = first ? q.y + r : std::max(hi_y, q.y + r);
      first = false;
    }
  }
  return face_at({hi_x + (hi_x - lo_x) + 1.377, hi_y + 0.519});
}

}  // namespace pants
