#include "seplab/geometry.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "seplab/errors.hpp"

namespace seplab {

namespace {

using Wide = __int128;

void check_point(Point p) {
  if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit || p.y < -kCoordLimit) {
    throw InputError("coordinate (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                     ") outside the exact range [-2^40, 2^40]");
  }
}

// p is known to be collinear with segment s; test whether it lies on it.
bool on_segment(Point p, const Segment& s) {
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

struct Box {
  std::int64_t x0, y0, x1, y1;
  bool overlaps(const Box& o) const {
    return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
  }
};

Box bounding_box(const Polyline& p) {
  Box b{p.points[0].x, p.points[0].y, p.points[0].x, p.points[0].y};
  for (const Point& q : p.points) {
    b.x0 = std::min(b.x0, q.x);
    b.y0 = std::min(b.y0, q.y);
    b.x1 = std::max(b.x1, q.x);
    b.y1 = std::max(b.y1, q.y);
  }
  return b;
}

}  // namespace

int orientation(Point a, Point b, Point c) {
  Wide cross = Wide(b.x - a.x) * Wide(c.y - a.y) - Wide(b.y - a.y) * Wide(c.x - a.x);
  return (cross > 0) - (cross < 0);
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
  check_point(s1.a);
  check_point(s1.b);
  check_point(s2.a);
  check_point(s2.b);
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);
  if (o1 != o2 && o3 != o4) return true;
  // Remaining cases: some endpoint is collinear with the other segment.
  if (o1 == 0 && on_segment(s2.a, s1)) return true;
  if (o2 == 0 && on_segment(s2.b, s1)) return true;
  if (o3 == 0 && on_segment(s1.a, s2)) return true;
  if (o4 == 0 && on_segment(s1.b, s2)) return true;
  return false;
}

void check_polyline(const Polyline& p) {
  if (p.points.size() < 2) throw InputError("polyline needs at least 2 points");
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    check_point(p.points[i]);
    if (i > 0 && p.points[i] == p.points[i - 1]) {
      throw InputError("polyline has a zero-length segment at point " + std::to_string(i));
    }
  }
}

bool curves_intersect(const Polyline& p, const Polyline& q) {
  for (std::size_t i = 0; i + 1 < p.points.size(); ++i) {
    Segment s{p.points[i], p.points[i + 1]};
    for (std::size_t j = 0; j + 1 < q.points.size(); ++j) {
      if (segments_intersect(s, Segment{q.points[j], q.points[j + 1]})) return true;
    }
  }
  return false;
}

Graph intersection_graph(const StringRepresentation& rep) {
  const int n = static_cast<int>(rep.curves.size());
  std::vector<Box> boxes;
  boxes.reserve(n);
  for (const auto& c : rep.curves) {
    check_polyline(c);
    boxes.push_back(bounding_box(c));
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (boxes[u].overlaps(boxes[v]) && curves_intersect(rep.curves[u], rep.curves[v])) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

GeneratedInstance gen_random_segments(int n, std::int64_t coord_range, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_random_segments needs n >= 1");
  if (coord_range < 4) throw InputError("gen_random_segments needs coord_range >= 4");
  if (coord_range > kCoordLimit) throw InputError("coord_range exceeds the exact range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, coord_range);
  GeneratedInstance inst;
  inst.rep.curves.reserve(n);
  for (int i = 0; i < n; ++i) {
    Point a, b;
    do {
      a = {coord(rng), coord(rng)};
      b = {coord(rng), coord(rng)};
    } while (a == b);
    inst.rep.curves.push_back(Polyline{{a, b}});
  }
  inst.graph = intersection_graph(inst.rep);
  return inst;
}

GeneratedInstance gen_grid_strings(int k) {
  if (k < 1) throw InputError("gen_grid_strings needs k >= 1");
  GeneratedInstance inst;
  for (int i = 0; i < k; ++i) {
    inst.rep.curves.push_back(Polyline{{Point{0, i + 1}, Point{k + 1, i + 1}}});
  }
  for (int j = 0; j < k; ++j) {
    inst.rep.curves.push_back(Polyline{{Point{j + 1, 0}, Point{j + 1, k + 1}}});
  }
  inst.graph = intersection_graph(inst.rep);
  return inst;
}

}  // namespace seplab
