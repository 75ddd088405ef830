#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "geocoreset/errors.hpp"
#include "geocoreset/tolerances.hpp"

namespace geocoreset {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

// Exact-equality within the global distance tolerance.
inline bool near(Point a, Point b, double tol = kDistTol) { return dist(a, b) <= tol; }

// Sign of the signed area of triangle (a,b,c): +1 = counterclockwise,
// -1 = clockwise, 0 = exactly collinear. Uses a floating-point filter with a
// forward error bound; falls back to exact expansion arithmetic when the
// filter cannot decide, so the result is always the true sign.
int orient(Point a, Point b, Point c);

// The filtered double-precision determinant (not always sign-exact); exposed
// for distance-style uses where the magnitude matters.
double orient_value(Point a, Point b, Point c);

struct Segment {
  Point a;
  Point b;

  double length() const { return dist(a, b); }
  Point at(double t) const { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }
};

// Distance from point p to segment s (endpoints included).
double point_segment_dist(Point p, const Segment& s);

// Closest parameter t in [0,1] with s.at(t) nearest to p.
double closest_param(Point p, const Segment& s);

// True iff segments properly cross or touch within tol.
bool segments_intersect(const Segment& s, const Segment& t, double tol = kDistTol);

// --- directions -------------------------------------------------------------

// Normalize an angle into [0, 2*pi).
double norm_angle(double theta);

// Direction angle of the vector from a to b, in [0, 2*pi).
double direction_angle(Point a, Point b);

// A counterclockwise arc of directions on the unit circle, stored as a start
// angle in [0, 2*pi) plus a width in [0, 2*pi].
class DirectionArc {
public:
  DirectionArc() = default;
  static DirectionArc from_start_width(double start, double width);
  // Arc running counterclockwise from `from` to `to`.
  static DirectionArc ccw(double from, double to);

  double start() const { return start_; }
  double width() const { return width_; }
  double end() const { return norm_angle(start_ + width_); }

  // Membership with angular slack (default kAngleTol).
  bool contains(double theta, double slack = kAngleTol) const;
  bool intersects(const DirectionArc& other, double slack = kAngleTol) const;

private:
  double start_ = 0.0;
  double width_ = 0.0;
};

// The smaller of the two arcs between directions phi1 and phi2. Throws
// Errc::AntipodalEndpoints when the two directions are opposite within
// kAngleTol (both arcs are half circles; "smaller" is undefined).
DirectionArc arc_between(double phi1, double phi2);

// --- simple polygons ---------------------------------------------------------

enum class Containment { Interior, Boundary, Exterior };

struct Triangulation {
  struct Tri {
    std::array<int, 3> v;   // vertex indices, counterclockwise
  };
  std::vector<Tri> triangles;
  // adj[t][e] = index of the triangle sharing edge (v[e], v[(e+1)%3]), or -1.
  // The adjacency graph of a simple-polygon triangulation is a tree.
  std::vector<std::array<int, 3>> adj;

  // Index of a triangle whose closed region contains p; ties (p on a shared
  // edge) resolve to the smallest triangle index. Returns -1 when p lies in
  // no triangle (outside the polygon).
  int locate(Point p, const std::vector<Point>& verts) const;

  // Uniform grid over the polygon bounding box used to speed up locate().
  struct Grid {
    double x0 = 0, y0 = 0, cell = 1;
    int nx = 0, ny = 0;
    std::vector<std::vector<int>> buckets; // triangle ids, ascending
  };
  Grid grid;
  void build_grid(const std::vector<Point>& verts);
};

struct RayHit {
  Point point;     // boundary point hit (or the capped point)
  double t;        // distance from the origin along the ray
  bool capped;     // true when max_len stopped the walk before the boundary
};

// A simple polygon with counterclockwise vertex order. Construct only through
// validate(); every instance is structurally sound by construction.
class SimplePolygon {
public:
  // Checks, in order: vertex count >= 3, no duplicate vertices (within tol),
  // no exactly-collinear consecutive triple, no self-intersection. Clockwise
  // input is reversed to counterclockwise. Throws Error on violation.
  static SimplePolygon validate(std::vector<Point> vertices, double tol = kDistTol);

  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<Point>& vertices() const { return verts_; }
  Point vertex(int i) const { return verts_[index(i)]; }
  int index(int i) const {
    int n = size();
    return ((i % n) + n) % n;
  }
  Segment edge(int i) const { return {vertex(i), vertex(i + 1)}; }

  double area() const { return area_; }
  double perimeter() const { return perimeter_; }
  bool is_reflex(int i) const { return reflex_[index(i)]; }

  Containment contains(Point p, double tol = kDistTol) const;

  // First boundary point hit walking from origin along direction dir
  // (normalized internally). The walk starts at distance 0; an origin on the
  // boundary heading outside yields t = 0. Throws Errc::OriginOutside when
  // the origin lies strictly outside and Errc::DegeneratePath when dir ~ 0.
  RayHit ray_shoot(Point origin, Point dir,
                   std::optional<double> max_len = std::nullopt) const;

  // Ear-clipping triangulation plus its dual tree, built on first use and
  // cached (the polygon stays logically immutable).
  const Triangulation& triangulation() const;

  SimplePolygon(const SimplePolygon& other);
  SimplePolygon& operator=(const SimplePolygon& other);
  SimplePolygon(SimplePolygon&&) noexcept = default;
  SimplePolygon& operator=(SimplePolygon&&) noexcept = default;

private:
  explicit SimplePolygon(std::vector<Point> verts);
  void finish_init();

  std::vector<Point> verts_;
  double area_ = 0.0;
  double perimeter_ = 0.0;
  std::vector<bool> reflex_;

  mutable std::unique_ptr<std::once_flag> tri_once_;
  mutable std::unique_ptr<Triangulation> tri_;
};

// Triangulate an arbitrary counterclockwise simple-polygon vertex ring (used
// both by SimplePolygon and for sub-polygons built during decomposition).
Triangulation triangulate(const std::vector<Point>& verts);

// Containment against a raw vertex ring (either orientation; no validation).
// Sub-polygons produced by decomposition are tested with this — they may
// legally contain collinear runs that SimplePolygon::validate would reject.
Containment ring_contains(const std::vector<Point>& ring, Point p, double tol = kDistTol);

} // namespace geocoreset
