#include "planeheight/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

namespace planeheight {

namespace {

struct Segment {
  Point a, b;
  int curve;
};

using Key = std::pair<double, double>;

std::vector<Point> chain(const std::vector<std::pair<Point, Point>>& segs) {
  if (segs.empty()) return {};
  std::map<Key, std::vector<int>> at;
  for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
    at[{segs[i].first.x, segs[i].first.y}].push_back(i);
    at[{segs[i].second.x, segs[i].second.y}].push_back(i);
  }
  // start at the leftmost point of degree one
  Key start = at.begin()->first;
  for (const auto& [k, v] : at)
    if (v.size() == 1) {
      start = k;
      break;
    }
  std::vector<Point> out{{start.first, start.second}};
  std::vector<char> used(segs.size(), 0);
  Key cur = start;
  for (;;) {
    int next = -1;
    for (int s : at[cur])
      if (!used[s]) {
        next = s;
        break;
      }
    if (next < 0) break;
    used[next] = 1;
    const auto& [p, q] = segs[next];
    Point far = (Key{p.x, p.y} == cur) ? q : p;
    out.push_back(far);
    cur = {far.x, far.y};
  }
  return out;
}

}  // namespace

Geometry render(const Drawing& d) {
  const auto& disk = d.disk;
  const auto& t = disk.tree;
  replay(d);  // reject illegal drawings up front

  Geometry g;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  g.vertices.assign(t.vertex_count(), Point{nan, nan});
  g.has_vertex.assign(t.vertex_count(), 0);
  const int M = static_cast<int>(d.moves.size());
  g.width = M + 1;

  std::vector<std::vector<std::pair<Point, Point>>> segs(t.edge_count());
  SweepState s = SweepState::initial(disk);
  std::vector<Point> last;  // current loose end of every frontier crossing
  for (int i = 0; i < static_cast<int>(s.frontier.size()); ++i) {
    Point p{0.5, double(i)};
    segs[s.frontier[i].edge].push_back({{0.0, double(i)}, p});
    last.push_back(p);
  }

  for (int i = 0; i < M; ++i) {
    const Move& m = d.moves[i];
    const FrontierEffect fx = effect_of(t, m);
    const double xm = i + 1, x1 = i + 1.5;
    const std::vector<Crossing> before = s.frontier;
    apply_move_inplace(disk, s, m);
    std::vector<Point> next(s.frontier.size());

    for (int j = 0; j < fx.pos; ++j) {
      next[j] = {x1, double(j)};
      segs[before[j].edge].push_back({last[j], next[j]});
    }
    const int below = static_cast<int>(before.size()) - fx.pos - fx.removed;
    for (int j = 0; j < below; ++j) {
      int from = fx.pos + fx.removed + j, to = fx.pos + fx.inserted + j;
      next[to] = {x1, double(to)};
      segs[before[from].edge].push_back({last[from], next[to]});
    }

    Point c;
    switch (m.kind) {
      case MoveKind::Vertex:
        c = {xm, fx.pos - 0.5 + (fx.removed + fx.inserted) / 4.0};
        g.vertices[m.vertex] = c;
        g.has_vertex[m.vertex] = 1;
        break;
      case MoveKind::LeftBend:
        c = {xm, double(fx.pos)};
        break;
      case MoveKind::RightBend:
        c = {xm, fx.pos + 0.5};
        break;
    }
    for (int j = 0; j < fx.removed; ++j) segs[before[fx.pos + j].edge].push_back({last[fx.pos + j], c});
    for (int j = 0; j < fx.inserted; ++j) {
      int to = fx.pos + j;
      next[to] = {x1, double(to)};
      segs[s.frontier[to].edge].push_back({c, next[to]});
    }
    last = std::move(next);
  }
  for (int i = 0; i < static_cast<int>(s.frontier.size()); ++i)
    segs[s.frontier[i].edge].push_back({last[i], {M + 1.0, double(i)}});

  for (EdgeId e = 0; e < t.edge_count(); ++e)
    if (!segs[e].empty()) g.curves.push_back({e, chain(segs[e])});
  return g;
}

int verify_rendering(const Geometry& g) {
  std::vector<double> xs;
  for (VertexId v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    if (g.has_vertex[v]) xs.push_back(g.vertices[v].x);
  for (const auto& c : g.curves) {
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
      if (c.points[i].x == c.points[i + 1].x) throw std::invalid_argument("vertical segment in edge " + std::to_string(c.edge));
    for (const auto& p : c.points) xs.push_back(p.x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  int best = std::any_of(g.has_vertex.begin(), g.has_vertex.end(), [](char c) { return c != 0; }) ? 1 : 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double x = (xs[i] + xs[i + 1]) / 2;
    int count = 0;
    for (const auto& c : g.curves)
      for (std::size_t j = 0; j + 1 < c.points.size(); ++j) {
        double lo = std::min(c.points[j].x, c.points[j + 1].x), hi = std::max(c.points[j].x, c.points[j + 1].x);
        if (lo < x && x < hi) ++count;
      }
    best = std::max(best, count);
  }
  return best;
}

namespace {

double orient(const Point& a, const Point& b, const Point& c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool touches(const Segment& s, const Segment& u) {
  double d1 = orient(s.a, s.b, u.a), d2 = orient(s.a, s.b, u.b);
  double d3 = orient(u.a, u.b, s.a), d4 = orient(u.a, u.b, s.b);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  if (d1 == 0 && on_segment(s.a, s.b, u.a)) return true;
  if (d2 == 0 && on_segment(s.a, s.b, u.b)) return true;
  if (d3 == 0 && on_segment(u.a, u.b, s.a)) return true;
  if (d4 == 0 && on_segment(u.a, u.b, s.b)) return true;
  return false;
}

}  // namespace

bool is_planar(const Geometry& g) {
  std::vector<Segment> segs;
  for (int c = 0; c < static_cast<int>(g.curves.size()); ++c) {
    const auto& pts = g.curves[c].points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back({pts[i], pts[i + 1], c});
  }
  for (auto& s : segs)
    if (s.b.x < s.a.x) std::swap(s.a, s.b);
  std::sort(segs.begin(), segs.end(), [](const Segment& p, const Segment& q) { return p.a.x < q.a.x; });
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size() && segs[j].a.x <= segs[i].b.x; ++j) {
      const Segment &s = segs[i], &u = segs[j];
      if (!touches(s, u)) continue;
      // a common endpoint is fine unless the two segments overlap along a line
      Point shared;
      bool share = false;
      for (const Point& p : {s.a, s.b})
        for (const Point& q : {u.a, u.b})
          if (p == q) {
            shared = p;
            share = true;
          }
      if (!share) return false;
      if (orient(s.a, s.b, u.a) == 0 && orient(s.a, s.b, u.b) == 0) {
        Point so = (s.a == shared) ? s.b : s.a, uo = (u.a == shared) ? u.b : u.a;
        // collinear: overlapping iff both run the same direction from the shared point
        if ((so.x - shared.x) * (uo.x - shared.x) + (so.y - shared.y) * (uo.y - shared.y) > 0) return false;
      }
    }
  return true;
}

std::string to_svg(const Geometry& g) {
  const double scale = 40, margin = 20;
  double ymax = 0;
  for (const auto& c : g.curves)
    for (const auto& p : c.points) ymax = std::max(ymax, p.y);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (g.has_vertex[v]) ymax = std::max(ymax, g.vertices[v].y);
  auto X = [&](double x) { return margin + scale * x; };
  auto Y = [&](double y) { return margin + scale * (y + 0.5); };
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * margin + scale * g.width << "\" height=\""
     << 2 * margin + scale * (ymax + 1) << "\">\n";
  for (const auto& c : g.curves) {
    os << "  <path class=\"edge e" << c.edge << "\" fill=\"none\" stroke=\"black\" d=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i)
      os << (i ? " L " : "M ") << X(c.points[i].x) << " " << Y(c.points[i].y);
    os << "\"/>\n";
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (g.has_vertex[v])
      os << "  <circle class=\"vertex v" << v << "\" cx=\"" << X(g.vertices[v].x) << "\" cy=\"" << Y(g.vertices[v].y)
         << "\" r=\"4\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace planeheight
