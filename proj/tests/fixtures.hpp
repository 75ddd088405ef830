#pragma once

#include <random>
#include <vector>

#include "geocoreset/geom.hpp"

// Shared polygon fixtures for the unit tests. All live in small integer-ish
// coordinates so hand-computed expectations stay exact.
namespace fixtures {

using geocoreset::Containment;
using geocoreset::Point;
using geocoreset::SimplePolygon;

// 10x10 axis-aligned square (convex).
inline SimplePolygon square() {
  return SimplePolygon::validate({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
}

// L-shaped hexagon, one reflex vertex at (2,2).
// Region: [0,4]x[0,2] union [2,4]x[2,4].
inline SimplePolygon ell() {
  return SimplePolygon::validate({{0, 0}, {4, 0}, {4, 4}, {2, 4}, {2, 2}, {0, 2}});
}

// Staircase with two reflex vertices at (6,3) and (4,3).
// Region: [0,4]x[0,8] union [4,6]x[0,3] union [6,10]x[0,6].
inline SimplePolygon zigzag() {
  return SimplePolygon::validate(
      {{0, 0}, {10, 0}, {10, 6}, {6, 6}, {6, 3}, {4, 3}, {4, 8}, {0, 8}});
}

// Long rectangle with two narrow spikes reaching down to y=1. The geodesic
// between the side midpoints bends under both tips, pinching off the small
// quadrilateral between the spikes.
inline SimplePolygon spiked() {
  return SimplePolygon::validate({{0, 0},
                                  {20, 0},
                                  {20, 4},
                                  {10.5, 4},
                                  {9.5, 1},
                                  {9.4, 4},
                                  {8.6, 4},
                                  {8.5, 1},
                                  {7.5, 4},
                                  {0, 4}});
}

// Corridor with one spike up from the floor (tip (4,2)) and one down from the
// ceiling (tip (4.8,1.5)); a path across it turns right then left, so the
// edge between the two tips has open regions on both sides.
inline SimplePolygon scorridor() {
  return SimplePolygon::validate({{0, 0},
                                  {3.9, 0},
                                  {4, 2},
                                  {4.1, 0},
                                  {10, 0},
                                  {10, 3},
                                  {4.9, 3},
                                  {4.8, 1.5},
                                  {4.7, 3},
                                  {0, 3}});
}

// Self-intersecting ring (not a valid polygon; feed to validate() in tests).
inline std::vector<Point> bowtie() { return {{0, 0}, {2, 2}, {2, 0}, {0, 2}}; }

// Uniform point strictly-or-boundary inside the polygon, by rejection from
// the bounding box.
inline Point random_inside(const SimplePolygon& poly, std::mt19937_64& rng) {
  double x0 = poly.vertex(0).x, x1 = x0, y0 = poly.vertex(0).y, y1 = y0;
  for (const Point& v : poly.vertices()) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  for (int tries = 0; tries < 100000; ++tries) {
    Point p{ux(rng), uy(rng)};
    if (poly.contains(p) != Containment::Exterior) return p;
  }
  throw std::runtime_error("rejection sampling failed");
}

} // namespace fixtures
