#pragma once

#include <cstdint>
#include <vector>

#include "seplab/graph.hpp"

namespace seplab {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Point&) const = default;
};

struct Segment {
  Point a;
  Point b;
};

// Coordinates must satisfy |x|, |y| <= kCoordLimit. Differences then fit in
// 42 bits and orientation products in 84 bits, so 128-bit integer arithmetic
// is exact.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 40;

// A curve given by >= 2 points with distinct consecutive points.
struct Polyline {
  std::vector<Point> points;
};

struct StringRepresentation {
  std::vector<Polyline> curves;  // one per vertex id
};

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right, 0 collinear.
int orientation(Point a, Point b, Point c);

// Closed-segment intersection: touching endpoints and collinear overlap count.
// Throws InputError if a coordinate exceeds kCoordLimit.
bool segments_intersect(const Segment& s1, const Segment& s2);

// Throws InputError for fewer than 2 points, repeated consecutive points or
// coordinates outside the exact range.
void check_polyline(const Polyline& p);

bool curves_intersect(const Polyline& p, const Polyline& q);

Graph intersection_graph(const StringRepresentation& rep);

struct GeneratedInstance {
  StringRepresentation rep;
  Graph graph;
};

// n segments with endpoints i.i.d. uniform on {0..coord_range}^2; zero-length
// draws are resampled. Deterministic in seed.
GeneratedInstance gen_random_segments(int n, std::int64_t coord_range, std::uint64_t seed);

// k horizontal segments (vertices 0..k-1) crossing k vertical segments
// (vertices k..2k-1); the intersection graph is K_{k,k}.
GeneratedInstance gen_grid_strings(int k);

}  // namespace seplab
