#include "pants/render.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "pants/error.hpp"
#include "pants/special_loops.hpp"

namespace pants {

namespace {

constexpr const char* kColour[3] = {"#d62728", "#1f77b4", "#2ca02c"};
constexpr const char* kTint[3] = {"#f7c6c7", "#c6dbef", "#c7e9c0"};

void on_circle(std::vector<Point>& pos, const std::vector<VertexId>& ring) {
  const double m = static_cast<double>(ring.size());
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const double a = 2 * std::numbers::pi * static_cast<double>(k) / m + std::numbers::pi / 2;
    pos[ring[k]] = {std::cos(a), std::sin(a)};
  }
}

// Quadratic Bezier for each edge, from tail(2e) to head(2e), in pixels.
struct EdgeCurve {
  Point from, control, to;
  bool loop = false;
};

class Canvas {
 public:
  Canvas(const CombinatorialMap& map, const std::vector<Point>& layout, int size)
      : map_(map), size_(size) {
    const double half = size / 2.0;
    const double scale = half - 40;
    for (const Point& p : layout) px_.push_back({half + scale * p.x, half - scale * p.y});
    std::map<std::pair<int, int>, std::vector<EdgeId>> parallel;
    for (EdgeId e = 0; e < map.num_edges(); ++e) {
      const int u = map.tail(2 * e), v = map.head(2 * e);
      parallel[{std::min(u, v), std::max(u, v)}].push_back(e);
    }
    curves_.resize(map.num_edges());
    for (const auto& [ends, group] : parallel) {
      const Point a = px_[ends.first], b = px_[ends.second];
      const double m = static_cast<double>(group.size());
      for (std::size_t k = 0; k < group.size(); ++k) {
        const EdgeId e = group[k];
        EdgeCurve c;
        if (ends.first == ends.second) {
          const Point dir = unit({a.x - half, a.y - half});
          const double s = 18 + 10 * static_cast<double>(k);
          c = {a, {a.x + 2 * s * dir.x, a.y + 2 * s * dir.y}, a, true};
        } else {
          const Point n = unit({a.y - b.y, b.x - a.x});
          const double len = std::hypot(b.x - a.x, b.y - a.y);
          const double off = (static_cast<double>(k) - (m - 1) / 2) * std::max(12.0, 0.6 * len / m);
          c = {a, {(a.x + b.x) / 2 + off * n.x, (a.y + b.y) / 2 + off * n.y}, b, false};
        }
        if (map.tail(2 * e) != ends.first) std::swap(c.from, c.to);
        curves_[e] = c;
      }
    }
  }

  std::string edge_path(EdgeId e) const {
    std::ostringstream out;
    out << "M " << xy(curves_[e].from) << ' ' << piece(2 * e);
    return out.str();
  }

  std::string face_path(FaceId f) const {
    const auto darts = map_.face(f);
    std::ostringstream out;
    out << "M " << xy(start(darts.front()));
    for (const Dart d : darts) out << ' ' << piece(d);
    out << " Z";
    return out.str();
  }

  Point face_label(FaceId f) const {
    Point sum{0, 0};
    const auto darts = map_.face(f);
    for (const Dart d : darts) {
      const auto& c = curves_[CombinatorialMap::edge_of(d)];
      sum.x += (c.from.x + 2 * c.control.x + c.to.x) / 4;
      sum.y += (c.from.y + 2 * c.control.y + c.to.y) / 4;
    }
    const double n = static_cast<double>(darts.size());
    return {sum.x / n, sum.y / n};
  }

  const std::vector<Point>& vertices() const { return px_; }

  static std::string xy(Point p) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << p.x << ' ' << p.y;
    return out.str();
  }

 private:
  static Point unit(Point v) {
    const double n = std::hypot(v.x, v.y);
    return n < 1e-9 ? Point{0, -1} : Point{v.x / n, v.y / n};
  }

  Point start(Dart d) const {
    const auto& c = curves_[CombinatorialMap::edge_of(d)];
    return d % 2 == 0 ? c.from : c.to;
  }

  std::string piece(Dart d) const {
    const auto& c = curves_[CombinatorialMap::edge_of(d)];
    const Point to = d % 2 == 0 ? c.to : c.from;
    if (!c.loop) return "Q " + xy(c.control) + ' ' + xy(to);
    const Point dir{c.control.x - c.from.x, c.control.y - c.from.y};
    Point p{c.from.x + dir.x - dir.y / 2, c.from.y + dir.y + dir.x / 2};
    Point q{c.from.x + dir.x + dir.y / 2, c.from.y + dir.y - dir.x / 2};
    if (d % 2 == 1) std::swap(p, q);
    return "C " + xy(p) + ' ' + xy(q) + ' ' + xy(to);
  }

  const CombinatorialMap& map_;
  int size_;
  std::vector<Point> px_;
  std::vector<EdgeCurve> curves_;
};

double closest_pair(const std::vector<Point>& pos) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      best = std::min(best, std::hypot(pos[a].x - pos[b].x, pos[a].y - pos[b].y));
    }
  }
  return best;
}

// Force-directed pass with the outer ring fixed. Used when the barycentric
// layout puts several vertices on one point, which happens at cut vertices.
void spread(const CombinatorialMap& map, std::vector<Point>& pos, const std::vector<bool>& fixed) {
  const int nv = map.num_vertices();
  const double k = std::sqrt(std::numbers::pi / nv);
  for (int v = 0; v < nv; ++v) {
    if (!fixed[v]) {
      pos[v].x += 1e-3 * std::cos(1.0 + v);
      pos[v].y += 1e-3 * std::sin(1.0 + v);
    }
  }
  double heat = 0.1;
  for (int step = 0; step < 300; ++step, heat *= 0.985) {
    std::vector<Point> push(nv, Point{0, 0});
    for (int v = 0; v < nv; ++v) {
      if (fixed[v]) continue;
      for (int w = 0; w < nv; ++w) {
        if (w == v) continue;
        const double dx = pos[v].x - pos[w].x, dy = pos[v].y - pos[w].y;
        const double d = std::max(1e-4, std::hypot(dx, dy));
        push[v].x += dx / d * k * k / d;
        push[v].y += dy / d * k * k / d;
      }
      for (const Dart e : map.rotation(v)) {
        const VertexId w = map.head(e);
        const double dx = pos[w].x - pos[v].x, dy = pos[w].y - pos[v].y;
        const double d = std::hypot(dx, dy);
        push[v].x += dx * d / k;
        push[v].y += dy * d / k;
      }
    }
    for (int v = 0; v < nv; ++v) {
      const double n = std::hypot(push[v].x, push[v].y);
      if (fixed[v] || n < 1e-12) continue;
      const double s = std::min(n, heat) / n;
      pos[v].x += push[v].x * s;
      pos[v].y += push[v].y * s;
      const double r = std::hypot(pos[v].x, pos[v].y);
      if (r > 0.95) {
        pos[v].x *= 0.95 / r;
        pos[v].y *= 0.95 / r;
      }
    }
  }
}

}  // namespace

FaceId default_outer_face(const CombinatorialMap& map) {
  FaceId best = 0;
  std::size_t most = 0;
  for (FaceId f = 0; f < map.num_faces(); ++f) {
    const std::size_t n = map.face_vertices(f).size();
    if (n > most) {
      most = n;
      best = f;
    }
  }
  return best;
}

std::vector<Point> tutte_layout(const CombinatorialMap& map, FaceId outer) {
  if (outer < 0 || outer >= map.num_faces()) {
    throw Error(ErrorCode::BadFaceIndex, "face " + std::to_string(outer) + " out of range");
  }
  const int nv = map.num_vertices();
  std::vector<Point> pos(nv, Point{0, 0});
  const auto ring = map.face_vertices(outer);
  if (ring.size() < 3) {
    std::vector<VertexId> all(nv);
    for (int v = 0; v < nv; ++v) all[v] = v;
    on_circle(pos, all);
    return pos;
  }
  on_circle(pos, ring);

  std::vector<int> index(nv, -1);
  for (const VertexId v : ring) index[v] = -2;
  int inner = 0;
  for (int v = 0; v < nv; ++v) {
    if (index[v] == -1) index[v] = inner++;
  }
  if (inner == 0) return pos;

  std::vector<Eigen::Triplet<double>> entries;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(inner), by = Eigen::VectorXd::Zero(inner);
  for (int v = 0; v < nv; ++v) {
    const int row = index[v];
    if (row < 0) continue;
    for (const Dart d : map.rotation(v)) {
      const VertexId w = map.head(d);
      if (w == v) continue;
      entries.emplace_back(row, row, 1.0);
      if (index[w] >= 0) {
        entries.emplace_back(row, index[w], -1.0);
      } else {
        bx[row] += pos[w].x;
        by[row] += pos[w].y;
      }
    }
  }
  Eigen::SparseMatrix<double> laplacian(inner, inner);
  laplacian.setFromTriplets(entries.begin(), entries.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(laplacian);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::InvariantViolated, "singular layout system");
  }
  const Eigen::VectorXd x = solver.solve(bx), y = solver.solve(by);
  std::vector<bool> fixed(nv);
  for (int v = 0; v < nv; ++v) {
    fixed[v] = index[v] < 0;
    if (!fixed[v]) pos[v] = {x[index[v]], y[index[v]]};
  }
  constexpr double kClose = 1e-3;
  if (closest_pair(pos) < kClose) {
    std::vector<bool> hold = fixed;
    for (int v = 0; v < nv; ++v) {
      bool alone = true;
      for (int w = 0; w < nv && alone; ++w) {
        alone = w == v || std::hypot(pos[v].x - pos[w].x, pos[v].y - pos[w].y) >= kClose;
      }
      if (alone) hold[v] = true;
    }
    spread(map, pos, hold);
  }
  return pos;
}

std::string render_svg(const SigmaGraph& g, const RenderOptions& options) {
  const auto& map = g.map();
  const FaceId outer = options.outer.value_or(default_outer_face(map));
  const Canvas canvas(map, tutte_layout(map, outer), options.size);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size
      << "\" height=\"" << options.size << "\" viewBox=\"0 0 " << options.size << ' ' << options.size
      << "\">\n";
  const int outer_mark = g.marked_index_of(outer);
  out << "<rect width=\"100%\" height=\"100%\" fill=\""
      << (outer_mark ? kTint[outer_mark - 1] : "white") << "\"/>\n";
  if (outer_mark) {
    out << "<g fill=\"white\" stroke=\"none\">\n";
    for (FaceId f = 0; f < map.num_faces(); ++f) {
      if (f != outer) out << "<path d=\"" << canvas.face_path(f) << "\"/>\n";
    }
    out << "</g>\n";
  }
  for (int i = 1; i <= 3; ++i) {
    const FaceId f = g.marked(i);
    if (f == outer) continue;
    out << "<path d=\"" << canvas.face_path(f) << "\" fill=\"" << kTint[i - 1]
        << "\" stroke=\"none\"/>\n";
  }

  if (options.special_loops) {
    for (int i = 1; i <= 3; ++i) {
      std::vector<SimpleLoop> loops;
      try {
        loops = special_family(g, i).loops;
      } catch (const Error&) {
        continue;
      }
      out << "<g class=\"special F" << i << "\" fill=\"none\" stroke=\"" << kColour[i - 1]
          << "\" stroke-width=\"6\" stroke-opacity=\"0.45\" stroke-linecap=\"round\">\n";
      for (const auto& loop : loops) {
        for (const EdgeId e : loop.edge_set()) out << "<path d=\"" << canvas.edge_path(e) << "\"/>\n";
      }
      out << "</g>\n";
    }
  }

  out << "<g class=\"edges\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (EdgeId e = 0; e < map.num_edges(); ++e) out << "<path d=\"" << canvas.edge_path(e) << "\"/>\n";
  out << "</g>\n<g class=\"vertices\" fill=\"black\">\n";
  for (const Point& p : canvas.vertices()) {
    const auto at = Canvas::xy(p);
    const auto gap = at.find(' ');
    out << "<circle cx=\"" << at.substr(0, gap) << "\" cy=\"" << at.substr(gap + 1) << "\" r=\"3\"/>\n";
  }
  out << "</g>\n<g class=\"labels\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (int i = 1; i <= 3; ++i) {
    const FaceId f = g.marked(i);
    const Point p = f == outer ? Point{30, 24.0 * i} : canvas.face_label(f);
    const auto at = Canvas::xy(p);
    const auto gap = at.find(' ');
    out << "<text x=\"" << at.substr(0, gap) << "\" y=\"" << at.substr(gap + 1) << "\" fill=\""
        << kColour[i - 1] << "\">F" << i << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace pants
