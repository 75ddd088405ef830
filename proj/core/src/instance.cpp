#include "geocoreset/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "geocoreset/errors.hpp"

namespace geocoreset {

namespace {

constexpr double kBox = 1000.0; // generators emit coordinates inside [0,kBox]^2

SimplePolygon convex_polygon(int m) {
  const double r = kBox / 2.0;
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    double a = 2.0 * std::numbers::pi * i / m;
    v.push_back({r + r * std::cos(a), r + r * std::sin(a)});
  }
  return SimplePolygon::validate(std::move(v));
}

// Flat spine [0,kBox] x [0,h] with t upward teeth of depth 10h. The rightmost
// tooth is flush with the right wall, which is what lands the vertex count on
// exactly 4t + 2.
SimplePolygon comb_polygon(int m) {
  if (m < 6 || (m - 2) % 4 != 0)
    throw Error(Errc::GenerationFailed,
                "comb needs m = 4t + 2 vertices, got " + std::to_string(m));
  const int t = (m - 2) / 4;
  const double w = kBox / (2.0 * t); // tooth width == gap width
  const double h = kBox / 22.0;      // spine height
  const double top = 11.0 * h;
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(m));
  v.push_back({0.0, 0.0});
  v.push_back({kBox, 0.0});
  v.push_back({kBox, top});
  v.push_back({kBox - w, top});
  v.push_back({kBox - w, h});
  for (int k = 1; k < t; ++k) {
    double right = kBox - 2.0 * k * w;
    v.push_back({right, h});
    v.push_back({right, top});
    v.push_back({right - w, top});
    v.push_back({right - w, h});
  }
  v.push_back({0.0, h});
  return SimplePolygon::validate(std::move(v));
}

// Rectangular corridor spiraling inward: an axis-aligned midline whose legs
// shrink by one pitch per half wrap, offset to both sides by half the
// corridor width. The two walls plus the end caps close into a single ring of
// 2*(legs+1) vertices.
SimplePolygon spiral_polygon(int m) {
  const int legs = std::max(3, (m - 2) / 2);
  const double pitch = kBox / (legs / 2 + 2);
  const double half = pitch / 4.0; // corridor width pitch/2, wall air gap pitch/2
  const Point dirs[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

  std::vector<Point> mid;
  mid.reserve(static_cast<std::size_t>(legs) + 1);
  mid.push_back({half, half});
  const double first_len = kBox - pitch / 2.0;
  for (int k = 0; k < legs; ++k) {
    double len = first_len - pitch * (k / 2);
    Point d = dirs[k % 4];
    Point prev = mid.back();
    mid.push_back({prev.x + len * d.x, prev.y + len * d.y});
  }

  // One wall of the corridor; side is +half (left of the walk) or -half.
  // Interior corners sit at the crossing of consecutive offset lines, which
  // for perpendicular axis-aligned legs mixes one coordinate from each.
  auto wall = [&](double side) {
    auto off = [&](int k) {
      Point d = dirs[k % 4];
      return Point{mid[static_cast<std::size_t>(k)].x - side * d.y,
                   mid[static_cast<std::size_t>(k)].y + side * d.x};
    };
    std::vector<Point> w(static_cast<std::size_t>(legs) + 1);
    w.front() = off(0);
    for (int k = 1; k < legs; ++k) {
      Point a = off(k - 1), b = off(k);
      bool prev_horizontal = (k - 1) % 2 == 0;
      w[static_cast<std::size_t>(k)] = prev_horizontal ? Point{b.x, a.y} : Point{a.x, b.y};
    }
    Point d = dirs[(legs - 1) % 4];
    w.back() = {mid.back().x - side * d.y, mid.back().y + side * d.x};
    return w;
  };

  std::vector<Point> ring = wall(half);
  std::vector<Point> other = wall(-half);
  ring.insert(ring.end(), other.rbegin(), other.rend());
  return SimplePolygon::validate(std::move(ring));
}

bool properly_cross(Point a, Point b, Point c, Point d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

// Uncross the ring by 2-opt: reversing the span between two crossing edges
// strictly shortens the tour, so the loop terminates; the budget is pure
// defensiveness against pathological inputs.
bool untangle(std::vector<Point>& v) {
  const int n = static_cast<int>(v.size());
  long budget = 50L * n * n;
  bool dirty = true;
  while (dirty && budget > 0) {
    dirty = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue; // ring-adjacent edges
        if (properly_cross(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)],
                           v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>((j + 1) % n)])) {
          std::reverse(v.begin() + i + 1, v.begin() + j + 1);
          dirty = true;
          --budget;
        }
      }
    }
  }
  return budget > 0;
}

SimplePolygon random_2opt_polygon(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, kBox);
  constexpr int kRetries = 40;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<Point> v(static_cast<std::size_t>(m));
    for (auto& p : v) p = {coord(rng), coord(rng)};
    if (!untangle(v)) continue;
    try {
      return SimplePolygon::validate(std::move(v));
    } catch (const Error&) {
      // residual touch or collinear triple; draw fresh points
    }
  }
  throw Error(Errc::GenerationFailed, "random polygon generation exhausted its retry budget");
}

} // namespace

const char* kind_name(PolygonKind k) {
  switch (k) {
    case PolygonKind::Convex: return "convex";
    case PolygonKind::Random2Opt: return "random2opt";
    case PolygonKind::Comb: return "comb";
    case PolygonKind::Spiral: return "spiral";
  }
  return "?";
}

std::optional<PolygonKind> parse_kind(std::string_view name) {
  if (name == "convex") return PolygonKind::Convex;
  if (name == "random2opt") return PolygonKind::Random2Opt;
  if (name == "comb") return PolygonKind::Comb;
  if (name == "spiral") return PolygonKind::Spiral;
  return std::nullopt;
}

SimplePolygon gen_polygon(PolygonKind kind, int m, std::uint64_t seed) {
  if (m < 3)
    throw Error(Errc::TooFewVertices, "generator needs m >= 3, got " + std::to_string(m));
  switch (kind) {
    case PolygonKind::Convex: return convex_polygon(m);
    case PolygonKind::Comb: return comb_polygon(m);
    case PolygonKind::Spiral: return spiral_polygon(m);
    case PolygonKind::Random2Opt: return random_2opt_polygon(m, seed);
  }
  throw Error(Errc::Internal, "unknown polygon kind");
}

std::vector<Point> gen_points(const SimplePolygon& poly, int n, std::uint64_t seed) {
  Triangulation tri = triangulate(poly.vertices());
  const auto& verts = poly.vertices();

  std::vector<double> cum;
  cum.reserve(tri.triangles.size());
  double total = 0.0;
  for (const auto& t : tri.triangles) {
    Point a = verts[static_cast<std::size_t>(t.v[0])];
    Point b = verts[static_cast<std::size_t>(t.v[1])];
    Point c = verts[static_cast<std::size_t>(t.v[2])];
    total += 0.5 * std::abs(cross(b - a, c - a));
    cum.push_back(total);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    double u = unit(rng) * total;
    auto it = std::lower_bound(cum.begin(), cum.end(), u);
    std::size_t idx = std::min(static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
    const auto& t = tri.triangles[idx];
    Point a = verts[static_cast<std::size_t>(t.v[0])];
    Point b = verts[static_cast<std::size_t>(t.v[1])];
    Point c = verts[static_cast<std::size_t>(t.v[2])];
    double u1 = unit(rng), u2 = unit(rng);
    if (u1 + u2 > 1.0) {
      u1 = 1.0 - u1;
      u2 = 1.0 - u2;
    }
    out.push_back({a.x + u1 * (b.x - a.x) + u2 * (c.x - a.x),
                   a.y + u1 * (b.y - a.y) + u2 * (c.y - a.y)});
  }
  return out;
}

} // namespace geocoreset
