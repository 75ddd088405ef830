#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "fixtures.hpp"
#include "geocoreset/diameter.hpp"
#include "geocoreset/errors.hpp"
#include "geocoreset/geodesic.hpp"
#include "geocoreset/instance.hpp"

using namespace geocoreset;

namespace {

bool inside_box(const std::vector<Point>& pts, double lo, double hi) {
  return std::all_of(pts.begin(), pts.end(), [&](Point p) {
    return p.x >= lo - 1e-9 && p.x <= hi + 1e-9 && p.y >= lo - 1e-9 && p.y <= hi + 1e-9;
  });
}

} // namespace

TEST_CASE("kind names round-trip") {
  for (PolygonKind k : {PolygonKind::Convex, PolygonKind::Random2Opt, PolygonKind::Comb,
                        PolygonKind::Spiral}) {
    auto back = parse_kind(kind_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK(!parse_kind("hexagon").has_value());
  CHECK(!parse_kind("").has_value());
}

TEST_CASE("convex generator emits a regular m-gon spanning the box") {
  auto poly = gen_polygon(PolygonKind::Convex, 8, 0);
  REQUIRE(poly.size() == 8);
  CHECK(inside_box(poly.vertices(), 0.0, 1000.0));

  // all vertices on the circle of radius 500 around (500,500)
  for (Point p : poly.vertices()) {
    double r = std::hypot(p.x - 500.0, p.y - 500.0);
    CHECK(r == doctest::Approx(500.0));
  }
  // regular spacing: every edge the same length, no reflex vertex
  double side = std::hypot(poly.vertex(1).x - poly.vertex(0).x, poly.vertex(1).y - poly.vertex(0).y);
  for (int i = 0; i < poly.size(); ++i) {
    Segment e = poly.edge(i);
    CHECK(std::hypot(e.b.x - e.a.x, e.b.y - e.a.y) == doctest::Approx(side));
    CHECK(!poly.is_reflex(i));
  }
  CHECK(side == doctest::Approx(2.0 * 500.0 * std::sin(std::numbers::pi / 8)));

  // seed is irrelevant for the deterministic shapes
  auto again = gen_polygon(PolygonKind::Convex, 8, 1234);
  CHECK(again.vertices() == poly.vertices());
}

TEST_CASE("comb generator: 5 teeth give a 22-vertex comb, depth 10x spine") {
  auto poly = gen_polygon(PolygonKind::Comb, 22, 0);
  REQUIRE(poly.size() == 22);

  // Collect the distinct y-levels: floor 0, spine height h, tooth top 11h.
  std::set<double> ys;
  for (Point p : poly.vertices()) ys.insert(p.y);
  REQUIRE(ys.size() == 3);
  auto it = ys.begin();
  double floor_y = *it++;
  double spine_y = *it++;
  double top_y = *it;
  CHECK(floor_y == 0.0);
  CHECK(top_y - spine_y == doctest::Approx(10.0 * spine_y)); // teeth 10x deeper than the spine

  // 2 floor vertices, 2t at the spine level, 2t at the tooth tops
  auto count_at = [&](double y) {
    return std::count_if(poly.vertices().begin(), poly.vertices().end(),
                         [&](Point p) { return p.y == y; });
  };
  CHECK(count_at(floor_y) == 2);
  CHECK(count_at(spine_y) == 10);
  CHECK(count_at(top_y) == 10);

  SUBCASE("single tooth is the smallest comb") {
    auto small = gen_polygon(PolygonKind::Comb, 6, 0);
    CHECK(small.size() == 6);
  }
  SUBCASE("counts that are not 4t+2 are rejected") {
    CHECK_THROWS_AS(gen_polygon(PolygonKind::Comb, 9, 0), Error);
    CHECK_THROWS_AS(gen_polygon(PolygonKind::Comb, 20, 0), Error);
    try {
      gen_polygon(PolygonKind::Comb, 9, 0);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::GenerationFailed);
    }
  }
}

TEST_CASE("spiral generator builds a nested corridor") {
  for (int m : {8, 12, 20, 40}) {
    CAPTURE(m);
    auto poly = gen_polygon(PolygonKind::Spiral, m, 0);
    CHECK(poly.size() >= m - 1);
    CHECK(poly.size() <= std::max(m, 8));
    CHECK(inside_box(poly.vertices(), 0.0, 1000.0));
    // a corridor is thin: tiny area, huge perimeter relative to a disc
    CHECK(poly.area() < 0.5 * 1000.0 * 1000.0);
  }
  // wraps appear once the vertex budget allows them: reflex corners exist
  auto big = gen_polygon(PolygonKind::Spiral, 20, 0);
  int reflex = 0;
  for (int i = 0; i < big.size(); ++i) reflex += big.is_reflex(i) ? 1 : 0;
  CHECK(reflex > 0);
}

TEST_CASE("random2opt generator yields valid deterministic polygons") {
  auto poly = gen_polygon(PolygonKind::Random2Opt, 40, 7);
  REQUIRE(poly.size() == 40);
  CHECK(inside_box(poly.vertices(), 0.0, 1000.0));

  auto same = gen_polygon(PolygonKind::Random2Opt, 40, 7);
  CHECK(same.vertices() == poly.vertices());

  auto other = gen_polygon(PolygonKind::Random2Opt, 40, 8);
  CHECK(other.vertices() != poly.vertices());

  for (int m : {3, 10, 25}) {
    CAPTURE(m);
    auto p = gen_polygon(PolygonKind::Random2Opt, m, 11);
    CHECK(p.size() == m);
  }

  CHECK_THROWS_AS(gen_polygon(PolygonKind::Random2Opt, 2, 0), Error);
  try {
    gen_polygon(PolygonKind::Random2Opt, 2, 0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooFewVertices);
  }
}

TEST_CASE("gen_points samples the interior uniformly and reproducibly") {
  SUBCASE("all samples land inside, across shapes") {
    for (const auto* fix : {"square", "spiked", "scorridor"}) {
      CAPTURE(fix);
      SimplePolygon poly = fix == std::string("square")    ? fixtures::square()
                           : fix == std::string("spiked") ? fixtures::spiked()
                                                          : fixtures::scorridor();
      auto pts = gen_points(poly, 2000, 99);
      REQUIRE(pts.size() == 2000);
      for (Point p : pts) CHECK(poly.contains(p) != Containment::Exterior);
    }
  }

  SUBCASE("fixed seed reproduces bit-identical points") {
    auto poly = gen_polygon(PolygonKind::Random2Opt, 30, 5);
    auto a = gen_points(poly, 64, 17);
    auto b = gen_points(poly, 64, 17);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].x == b[i].x);
      CHECK(a[i].y == b[i].y);
    }
    auto c = gen_points(poly, 64, 18);
    CHECK(std::any_of(c.begin(), c.end(), [&](Point p) {
      return p.x != a[&p - c.data()].x;
    }));
  }

  SUBCASE("tiny draws") {
    auto pts = gen_points(fixtures::square(), 2, 3);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].x != pts[1].x);
  }

  SUBCASE("uniformity sanity: half-plane split of the square") {
    auto pts = gen_points(fixtures::square(), 10000, 21);
    int left = static_cast<int>(
        std::count_if(pts.begin(), pts.end(), [](Point p) { return p.x < 5.0; }));
    // binomial(10^4, 1/2): 3 sigma is 150
    CHECK(left > 4800);
    CHECK(left < 5200);
  }
}

TEST_CASE("generated polygons triangulate into a connected dual") {
  // Axis-aligned generators (comb, spiral) produce collinear boundary runs
  // mid-clip; the triangulation must still be a full partition (n-2 strictly
  // counterclockwise triangles covering the exact area) whose dual is one
  // tree, or the funnel walk cannot route between regions.
  for (auto kind : {PolygonKind::Convex, PolygonKind::Comb, PolygonKind::Spiral,
                    PolygonKind::Random2Opt}) {
    for (int m : {22, 38}) {
      for (std::uint64_t seed : {1ull, 9ull}) {
        CAPTURE(kind_name(kind));
        CAPTURE(m);
        CAPTURE(seed);
        auto poly = gen_polygon(kind, m, seed);
        const auto& v = poly.vertices();
        auto tri = triangulate(v);
        int n = static_cast<int>(v.size());
        REQUIRE(static_cast<int>(tri.triangles.size()) == n - 2);

        double tri_area = 0.0;
        for (const auto& t : tri.triangles) {
          Point a = v[t.v[0]], b = v[t.v[1]], c = v[t.v[2]];
          double twice = cross(b - a, c - a);
          CHECK(twice > 0.0);
          tri_area += 0.5 * twice;
        }
        CHECK(tri_area == doctest::Approx(poly.area()).epsilon(1e-12));

        std::vector<int> depth(tri.triangles.size(), -1);
        std::vector<int> stack{0};
        depth[0] = 0;
        while (!stack.empty()) {
          int t = stack.back();
          stack.pop_back();
          for (int nb : tri.adj[t])
            if (nb >= 0 && depth[nb] < 0) {
              depth[nb] = depth[t] + 1;
              stack.push_back(nb);
            }
        }
        CHECK(std::count(depth.begin(), depth.end(), -1) == 0);
      }
    }
  }
}

TEST_CASE("generated polygons survive a full geodesic pipeline") {
  // light integration: generators feed the rest of the library
  for (auto kind : {PolygonKind::Convex, PolygonKind::Comb, PolygonKind::Spiral,
                    PolygonKind::Random2Opt}) {
    CAPTURE(kind_name(kind));
    int m = kind == PolygonKind::Comb ? 22 : 20;
    auto poly = gen_polygon(kind, m, 3);
    auto pts = gen_points(poly, 8, 4);
    REQUIRE(pts.size() == 8);
    for (Point p : pts) REQUIRE(poly.contains(p) != Containment::Exterior);

    // Geodesics must route through every generated shape, including the
    // corridor kinds whose triangulations contain long collinear fans.
    auto path = shortest_path(poly, pts[0], pts[1]);
    CHECK(path.length >= dist(pts[0], pts[1]) - 1e-9);
    auto diam = compute_diameter(poly, pts);
    CHECK(diam.length > 0.0);
  }
}
