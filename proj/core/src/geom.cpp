#include "geocoreset/geom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace geocoreset {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::CollinearRun: return "CollinearRun";
    case Errc::SelfIntersecting: return "SelfIntersecting";
    case Errc::OriginOutside: return "OriginOutside";
    case Errc::PointOutside: return "PointOutside";
    case Errc::DegeneratePath: return "DegeneratePath";
    case Errc::AntipodalEndpoints: return "AntipodalEndpoints";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::BadEpsilon: return "BadEpsilon";
    case Errc::DegenerateAnchor: return "DegenerateAnchor";
    case Errc::EmptyCoreset: return "EmptyCoreset";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

// --- exact orientation --------------------------------------------------
//
// Floating-point filter with a forward error bound; when the filtered
// determinant is too small to trust, the 6-term determinant
//   ax*by - ax*cy - ay*bx + ay*cx + bx*cy - by*cx
// is evaluated in expansion arithmetic (every component exact), so the
// returned sign is always the true sign.

namespace {

constexpr double kMachEps = 1.1102230246251565e-16; // 2^-53
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kMachEps) * kMachEps;

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bvirt = x - a;
  double avirt = x - bvirt;
  double bround = b - bvirt;
  double around = a - avirt;
  y = around + bround;
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x); // exact: a*b - round(a*b) is representable
}

// h = e + b where e is a nonoverlapping expansion sorted by increasing
// magnitude; returns the new length. Zero components are dropped.
int grow_expansion_zeroelim(int elen, const double* e, double b, double* h) {
  double q = b;
  int hlen = 0;
  for (int i = 0; i < elen; ++i) {
    double qnew, hh;
    two_sum(q, e[i], qnew, hh);
    q = qnew;
    if (hh != 0.0) h[hlen++] = hh;
  }
  if (q != 0.0 || hlen == 0) h[hlen++] = q;
  return hlen;
}

int expansion_sign(int len, const double* e) {
  double top = e[len - 1]; // largest-magnitude component dominates
  if (top > 0.0) return 1;
  if (top < 0.0) return -1;
  return 0;
}

int orient_exact(Point a, Point b, Point c) {
  double terms[12];
  int nterms = 0;
  auto push = [&](double u, double v, double sign) {
    double x, y;
    two_product(u, v, x, y);
    terms[nterms++] = sign * y;
    terms[nterms++] = sign * x;
  };
  push(a.x, b.y, +1.0);
  push(a.x, c.y, -1.0);
  push(a.y, b.x, -1.0);
  push(a.y, c.x, +1.0);
  push(b.x, c.y, +1.0);
  push(b.y, c.x, -1.0);

  double e[16], h[16];
  int elen = 0;
  for (int i = 0; i < nterms; ++i) {
    elen = grow_expansion_zeroelim(elen, e, terms[i], h);
    std::copy(h, h + elen, e);
  }
  return expansion_sign(elen, e);
}

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

} // namespace

double orient_value(Point a, Point b, Point c) {
  return (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
}

int orient(Point a, Point b, Point c) {
  double detleft = (a.x - c.x) * (b.y - c.y);
  double detright = (a.y - c.y) * (b.x - c.x);
  double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return sign_of(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sign_of(det);
    detsum = -detleft - detright;
  } else {
    return sign_of(det); // det == -detright, exact
  }
  double errbound = kCcwErrBoundA * detsum;
  if (det >= errbound || -det >= errbound) return sign_of(det);
  return orient_exact(a, b, c);
}

// --- segments -------------------------------------------------------------

double closest_param(Point p, const Segment& s) {
  Point d = s.b - s.a;
  double len2 = dot(d, d);
  if (len2 == 0.0) return 0.0;
  return std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
}

double point_segment_dist(Point p, const Segment& s) {
  return dist(p, s.at(closest_param(p, s)));
}

bool segments_intersect(const Segment& s, const Segment& t, double tol) {
  int o1 = orient(s.a, s.b, t.a);
  int o2 = orient(s.a, s.b, t.b);
  int o3 = orient(t.a, t.b, s.a);
  int o4 = orient(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true; // proper crossing
  // Near-touch: closest approach of non-crossing segments is realized at an
  // endpoint of one against the other.
  if (point_segment_dist(t.a, s) <= tol) return true;
  if (point_segment_dist(t.b, s) <= tol) return true;
  if (point_segment_dist(s.a, t) <= tol) return true;
  if (point_segment_dist(s.b, t) <= tol) return true;
  return false;
}

// --- directions -------------------------------------------------------------

double norm_angle(double theta) {
  double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(theta, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0; // fmod may round up to two_pi
  return r;
}

double direction_angle(Point a, Point b) {
  return norm_angle(std::atan2(b.y - a.y, b.x - a.x));
}

DirectionArc DirectionArc::from_start_width(double start, double width) {
  DirectionArc arc;
  arc.start_ = norm_angle(start);
  arc.width_ = std::clamp(width, 0.0, 2.0 * std::numbers::pi);
  return arc;
}

DirectionArc DirectionArc::ccw(double from, double to) {
  return from_start_width(from, norm_angle(to - from));
}

bool DirectionArc::contains(double theta, double slack) const {
  double x = norm_angle(theta - start_);
  return x <= width_ + slack || x >= 2.0 * std::numbers::pi - slack;
}

bool DirectionArc::intersects(const DirectionArc& other, double slack) const {
  return contains(other.start_, slack) || contains(other.end(), slack) ||
         other.contains(start_, slack) || other.contains(end(), slack);
}

DirectionArc arc_between(double phi1, double phi2) {
  double d = norm_angle(phi2 - phi1);
  if (std::abs(d - std::numbers::pi) <= kAngleTol)
    throw Error(Errc::AntipodalEndpoints, "directions are opposite; no smaller arc");
  if (d < std::numbers::pi) return DirectionArc::from_start_width(phi1, d);
  return DirectionArc::from_start_width(phi2, 2.0 * std::numbers::pi - d);
}

// --- triangulation ------------------------------------------------------

namespace {

bool in_closed_tri(Point a, Point b, Point c, Point p) {
  return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

} // namespace

Triangulation triangulate(const std::vector<Point>& verts) {
  int n = static_cast<int>(verts.size());
  if (n < 3) throw Error(Errc::TooFewVertices, "need at least 3 vertices to triangulate");

  std::vector<int> next(n), prev(n);
  for (int i = 0; i < n; ++i) {
    next[i] = (i + 1) % n;
    prev[i] = (i + n - 1) % n;
  }

  auto ori = [&](int i, int j, int k) { return orient(verts[i], verts[j], verts[k]); };

  Triangulation tri;
  tri.triangles.reserve(n - 2);

  auto is_ear = [&](int p, int c, int nx) {
    for (int w = next[nx]; w != p; w = next[w]) {
      if (in_closed_tri(verts[p], verts[c], verts[nx], verts[w])) return false;
    }
    return true;
  };

  int remaining = n;
  int cur = 0;
  while (remaining > 3) {
    bool clipped = false;
    int scan = cur;
    do {
      int p = prev[scan], nx = next[scan];
      int o = ori(p, scan, nx);
      // o <= 0 (reflex or exactly straight) is never an ear; straight
      // vertices arise mid-clip when a diagonal closes flush with collinear
      // boundary, and they must stay in the ring — removing one would orphan
      // the diagonal that references it and disconnect the dual. An unblocked
      // ear always exists at some strictly convex vertex, so skipping here
      // cannot stall a simple ring.
      if (o > 0 && is_ear(p, scan, nx)) {
        tri.triangles.push_back({{p, scan, nx}});
        next[p] = nx;
        prev[nx] = p;
        --remaining;
        cur = nx;
        clipped = true;
        break;
      }
      scan = next[scan];
    } while (scan != cur);
    if (!clipped) throw Error(Errc::Internal, "ear clipping stalled (non-simple ring?)");
  }
  {
    int a = cur, b = next[cur], c = next[next[cur]];
    int o = ori(a, b, c);
    if (o > 0) tri.triangles.push_back({{a, b, c}});
    else if (o < 0) throw Error(Errc::Internal, "ear clipping left a clockwise triangle");
    // o == 0: the final triple is degenerate; nothing to emit.
  }

  // Dual adjacency: each interior diagonal is shared by exactly two triangles.
  tri.adj.assign(tri.triangles.size(), {-1, -1, -1});
  std::map<std::pair<int, int>, std::pair<int, int>> open; // edge -> (tri, slot)
  for (int t = 0; t < static_cast<int>(tri.triangles.size()); ++t) {
    for (int e = 0; e < 3; ++e) {
      int u = tri.triangles[t].v[e];
      int v = tri.triangles[t].v[(e + 1) % 3];
      auto key = std::minmax(u, v);
      auto it = open.find(key);
      if (it == open.end()) {
        open.emplace(key, std::make_pair(t, e));
      } else {
        tri.adj[t][e] = it->second.first;
        tri.adj[it->second.first][it->second.second] = t;
        open.erase(it);
      }
    }
  }
  return tri;
}

void Triangulation::build_grid(const std::vector<Point>& verts) {
  if (triangles.empty()) return;
  double x0 = verts[0].x, x1 = verts[0].x, y0 = verts[0].y, y1 = verts[0].y;
  for (const Point& p : verts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  int g = std::clamp(static_cast<int>(std::ceil(std::sqrt(double(triangles.size())))), 1, 64);
  grid.nx = grid.ny = g;
  grid.x0 = x0;
  grid.y0 = y0;
  grid.cell = std::max({(x1 - x0) / g, (y1 - y0) / g, 1e-300});
  grid.buckets.assign(size_t(g) * g, {});
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    Point a = verts[triangles[t].v[0]], b = verts[triangles[t].v[1]], c = verts[triangles[t].v[2]];
    double tx0 = std::min({a.x, b.x, c.x}), tx1 = std::max({a.x, b.x, c.x});
    double ty0 = std::min({a.y, b.y, c.y}), ty1 = std::max({a.y, b.y, c.y});
    int cx0 = std::clamp(int((tx0 - x0) / grid.cell), 0, g - 1);
    int cx1 = std::clamp(int((tx1 - x0) / grid.cell), 0, g - 1);
    int cy0 = std::clamp(int((ty0 - y0) / grid.cell), 0, g - 1);
    int cy1 = std::clamp(int((ty1 - y0) / grid.cell), 0, g - 1);
    for (int cy = cy0; cy <= cy1; ++cy)
      for (int cx = cx0; cx <= cx1; ++cx) grid.buckets[size_t(cy) * g + cx].push_back(t);
  }
}

int Triangulation::locate(Point p, const std::vector<Point>& verts) const {
  auto contains_tri = [&](int t) {
    return in_closed_tri(verts[triangles[t].v[0]], verts[triangles[t].v[1]],
                         verts[triangles[t].v[2]], p);
  };
  if (!grid.buckets.empty()) {
    int cx = std::clamp(int((p.x - grid.x0) / grid.cell), 0, grid.nx - 1);
    int cy = std::clamp(int((p.y - grid.y0) / grid.cell), 0, grid.ny - 1);
    for (int t : grid.buckets[size_t(cy) * grid.nx + cx]) {
      if (contains_tri(t)) return t; // buckets are ascending: smallest index wins
    }
    return -1;
  }
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    if (contains_tri(t)) return t;
  }
  return -1;
}

// --- SimplePolygon ---------------------------------------------------------

SimplePolygon::SimplePolygon(std::vector<Point> verts) : verts_(std::move(verts)) {
  finish_init();
}

void SimplePolygon::finish_init() {
  int n = size();
  double a2 = 0.0;
  perimeter_ = 0.0;
  for (int i = 0; i < n; ++i) {
    a2 += cross(verts_[i], verts_[(i + 1) % n]);
    perimeter_ += dist(verts_[i], verts_[(i + 1) % n]);
  }
  area_ = 0.5 * a2;
  reflex_.assign(n, false);
  for (int i = 0; i < n; ++i) {
    reflex_[i] = orient(verts_[(i + n - 1) % n], verts_[i], verts_[(i + 1) % n]) < 0;
  }
  tri_once_ = std::make_unique<std::once_flag>();
}

SimplePolygon::SimplePolygon(const SimplePolygon& other)
    : verts_(other.verts_),
      area_(other.area_),
      perimeter_(other.perimeter_),
      reflex_(other.reflex_),
      tri_once_(std::make_unique<std::once_flag>()),
      tri_(other.tri_ ? std::make_unique<Triangulation>(*other.tri_) : nullptr) {}

SimplePolygon& SimplePolygon::operator=(const SimplePolygon& other) {
  if (this != &other) {
    verts_ = other.verts_;
    area_ = other.area_;
    perimeter_ = other.perimeter_;
    reflex_ = other.reflex_;
    tri_once_ = std::make_unique<std::once_flag>();
    tri_ = other.tri_ ? std::make_unique<Triangulation>(*other.tri_) : nullptr;
  }
  return *this;
}

SimplePolygon SimplePolygon::validate(std::vector<Point> vertices, double tol) {
  int n = static_cast<int>(vertices.size());
  if (n < 3) throw Error(Errc::TooFewVertices, "polygon needs at least 3 vertices");

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (near(vertices[i], vertices[j], tol))
        throw Error(Errc::DuplicateVertex,
                    "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  for (int i = 0; i < n; ++i) {
    Point a = vertices[(i + n - 1) % n], b = vertices[i], c = vertices[(i + 1) % n];
    if (orient(a, b, c) == 0)
      throw Error(Errc::CollinearRun, "vertices around index " + std::to_string(i) +
                                          " are exactly collinear");
  }

  for (int i = 0; i < n; ++i) {
    Segment ei{vertices[i], vertices[(i + 1) % n]};
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      Segment ej{vertices[j], vertices[(j + 1) % n]};
      if (segments_intersect(ei, ej, tol))
        throw Error(Errc::SelfIntersecting,
                    "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
    }
  }

  double a2 = 0.0;
  for (int i = 0; i < n; ++i) a2 += cross(vertices[i], vertices[(i + 1) % n]);
  if (a2 < 0.0) std::reverse(vertices.begin(), vertices.end());

  return SimplePolygon(std::move(vertices));
}

Containment ring_contains(const std::vector<Point>& ring, Point p, double tol) {
  int n = static_cast<int>(ring.size());
  for (int i = 0; i < n; ++i) {
    if (point_segment_dist(p, {ring[i], ring[(i + 1) % n]}) <= tol) return Containment::Boundary;
  }
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    Point a = ring[i], b = ring[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && orient(a, b, p) > 0) inside = !inside;
    } else {
      if (b.y <= p.y && orient(a, b, p) < 0) inside = !inside;
    }
  }
  return inside ? Containment::Interior : Containment::Exterior;
}

Containment SimplePolygon::contains(Point p, double tol) const {
  return ring_contains(verts_, p, tol);
}

RayHit SimplePolygon::ray_shoot(Point origin, Point dir, std::optional<double> max_len) const {
  double dlen = norm(dir);
  if (dlen <= kDistTol) throw Error(Errc::DegeneratePath, "ray direction is (near) zero");
  Point r{dir.x / dlen, dir.y / dlen};
  if (contains(origin) == Containment::Exterior)
    throw Error(Errc::OriginOutside, "ray origin lies outside the polygon");

  // Collect parameters where the ray can change between inside and outside:
  // crossings with every edge, plus both endpoints of collinear overlaps.
  std::vector<double> events;
  int n = size();
  for (int i = 0; i < n; ++i) {
    Point a = verts_[i], b = verts_[(i + 1) % n];
    Point s = b - a;
    double slen = norm(s);
    double rxs = cross(r, s);
    Point qp = a - origin;
    if (std::abs(rxs) <= 1e-12 * slen) {
      if (std::abs(cross(qp, r)) <= kDistTol) { // collinear with the ray line
        double ta = dot(qp, r);
        double tb = dot(b - origin, r);
        for (double t : {ta, tb})
          if (t >= -kDistTol) events.push_back(std::max(t, 0.0));
      }
      continue;
    }
    double t = cross(qp, s) / rxs;
    double u = cross(qp, r) / rxs;
    double utol = kDistTol / std::max(slen, kDistTol);
    if (u >= -utol && u <= 1.0 + utol && t >= -kDistTol) events.push_back(std::max(t, 0.0));
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end(),
                           [](double a, double b) { return b - a <= kDistTol; }),
               events.end());

  // Walk the gaps between events; the exit distance is the start of the first
  // gap whose midpoint lies outside. Past the last event the ray is outside
  // (the polygon is bounded), so the last event is the fallback exit.
  double exit_t = -1.0;
  double prev = 0.0;
  bool found = false;
  for (double t : events) {
    if (t - prev > kDistTol) {
      Point mid = origin + 0.5 * (prev + t) * Point{r.x, r.y};
      if (contains(mid) == Containment::Exterior) {
        exit_t = prev;
        found = true;
        break;
      }
    }
    prev = t;
  }
  if (!found) {
    if (events.empty()) {
      if (contains(origin) == Containment::Boundary) return {origin, 0.0, false};
      throw Error(Errc::Internal, "interior ray found no boundary events");
    }
    exit_t = events.back();
  }

  if (max_len && *max_len < exit_t) {
    return {origin + *max_len * r, *max_len, true};
  }
  return {origin + exit_t * r, exit_t, false};
}

const Triangulation& SimplePolygon::triangulation() const {
  std::call_once(*tri_once_, [this] {
    if (!tri_) {
      auto t = std::make_unique<Triangulation>(triangulate(verts_));
      t->build_grid(verts_);
      tri_ = std::move(t);
    }
  });
  return *tri_;
}

} // namespace geocoreset
