#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "geocoreset/geodesic.hpp"

using namespace geocoreset;
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

namespace {

bool same_vertices(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

} // namespace

TEST_CASE("shortest_path: straight in a convex polygon") {
  SimplePolygon sq = fixtures::square();
  GeodesicPath p = shortest_path(sq, {1, 1}, {9, 9});
  CHECK(same_vertices(p.vertices, {{1, 1}, {9, 9}}));
  CHECK(p.length == doctest::Approx(8 * kSqrt2).epsilon(1e-12));

  GeodesicPath z = shortest_path(sq, {3, 3}, {3, 3});
  CHECK(z.degenerate());
  CHECK(z.length == 0.0);
  CHECK(z.vertices.size() == 1);
}

TEST_CASE("shortest_path: bends and grazes at the reflex corner") {
  SimplePolygon l = fixtures::ell();

  // The straight segment grazes the reflex vertex (2,2); the contact point
  // stays in the vertex list.
  GeodesicPath p = shortest_path(l, {1, 1}, {3, 3});
  CHECK(same_vertices(p.vertices, {{1, 1}, {2, 2}, {3, 3}}));
  CHECK(p.length == doctest::Approx(2 * kSqrt2).epsilon(1e-12));

  // Reversal gives the same path backwards.
  GeodesicPath r = shortest_path(l, {3, 3}, {1, 1});
  CHECK(same_vertices(r.vertices, {{3, 3}, {2, 2}, {1, 1}}));
  CHECK(r.length == doctest::Approx(p.length).epsilon(1e-15));

  // A genuinely bent path.
  GeodesicPath b = shortest_path(l, {0.5, 1.5}, {3, 3});
  CHECK(same_vertices(b.vertices, {{0.5, 1.5}, {2, 2}, {3, 3}}));
  CHECK(b.length ==
        doctest::Approx(std::hypot(1.5, 0.5) + std::hypot(1.0, 1.0)).epsilon(1e-12));

  // Mutually visible pair: straight, two vertices.
  GeodesicPath s = shortest_path(l, {3, 1}, {2.5, 3.5});
  CHECK(same_vertices(s.vertices, {{3, 1}, {2.5, 3.5}}));
  CHECK(s.length == doctest::Approx(std::sqrt(6.5)).epsilon(1e-12));
}

TEST_CASE("shortest_path: staircase corridor with two bends") {
  SimplePolygon z = fixtures::zigzag();
  GeodesicPath p = shortest_path(z, {1, 7}, {9, 5});
  CHECK(same_vertices(p.vertices, {{1, 7}, {4, 3}, {6, 3}, {9, 5}}));
  CHECK(p.length == doctest::Approx(5.0 + 2.0 + std::sqrt(13.0)).epsilon(1e-12));
}

TEST_CASE("shortest_path: endpoints outside are rejected") {
  SimplePolygon sq = fixtures::square();
  CHECK_THROWS_AS((void)shortest_path(sq, {-1, 5}, {5, 5}), Error);
  CHECK_THROWS_AS((void)shortest_path(sq, {5, 5}, {5, 11}), Error);
  try {
    (void)shortest_path(sq, {5, 5}, {5, 11});
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PointOutside);
  }
}

TEST_CASE("shortest_path: path structure invariants on random pairs") {
  std::mt19937_64 rng(17);
  for (const SimplePolygon& poly :
       {fixtures::ell(), fixtures::zigzag(), fixtures::scorridor(), fixtures::spiked()}) {
    for (int it = 0; it < 120; ++it) {
      Point a = fixtures::random_inside(poly, rng);
      Point b = fixtures::random_inside(poly, rng);
      GeodesicPath p = shortest_path(poly, a, b);
      REQUIRE(p.vertices.size() >= 1);
      CHECK(p.source() == a);
      CHECK(p.target() == b);
      CHECK(p.length >= dist(a, b) - 1e-9);

      double sum = 0.0;
      for (int e = 0; e < p.edge_count(); ++e)
        sum += dist(p.vertices[e], p.vertices[e + 1]);
      CHECK(p.length == doctest::Approx(sum).epsilon(1e-15));

      // Interior vertices are reflex polygon vertices; edge midpoints stay
      // inside the polygon.
      for (size_t i = 1; i + 1 < p.vertices.size(); ++i) {
        bool found = false;
        for (int v = 0; v < poly.size(); ++v)
          if (p.vertices[i] == poly.vertex(v)) found = poly.is_reflex(v);
        CHECK(found);
      }
      for (int e = 0; e < p.edge_count(); ++e) {
        Point mid = Segment{p.vertices[e], p.vertices[e + 1]}.at(0.5);
        CHECK(poly.contains(mid) != Containment::Exterior);
      }

      // Metric symmetry.
      GeodesicPath q = shortest_path(poly, b, a);
      CHECK(q.length == doctest::Approx(p.length).epsilon(1e-12));
    }
  }
}

TEST_CASE("shortest_path agrees with the visibility-graph oracle") {
  std::mt19937_64 rng(19);
  for (const SimplePolygon& poly :
       {fixtures::square(), fixtures::ell(), fixtures::zigzag(), fixtures::scorridor(),
        fixtures::spiked()}) {
    VisGraph vg(poly);
    for (int it = 0; it < 80; ++it) {
      Point a = fixtures::random_inside(poly, rng);
      Point b = fixtures::random_inside(poly, rng);
      double funnel = shortest_path(poly, a, b).length;
      double oracle = vg.distance(a, b);
      CHECK(std::abs(funnel - oracle) <= 1e-9 * (1.0 + funnel));
    }
  }
}

TEST_CASE("visgraph_distance: pinned values") {
  CHECK(visgraph_distance(fixtures::square(), {1, 1}, {9, 9}) ==
        doctest::Approx(8 * kSqrt2).epsilon(1e-12));
  CHECK(visgraph_distance(fixtures::ell(), {1, 1}, {3, 3}) ==
        doctest::Approx(2 * kSqrt2).epsilon(1e-12));
  CHECK(visgraph_distance(fixtures::ell(), {3, 1}, {3, 1}) == 0.0);
  CHECK_THROWS_AS((void)visgraph_distance(fixtures::square(), {11, 5}, {5, 5}), Error);
}

TEST_CASE("shortest path tree: queries match shortest_path exactly") {
  std::mt19937_64 rng(23);
  for (const SimplePolygon& poly :
       {fixtures::square(), fixtures::ell(), fixtures::zigzag(), fixtures::scorridor()}) {
    Point src = fixtures::random_inside(poly, rng);
    ShortestPathTree spt(poly, src);
    CHECK(spt.source() == src);

    for (int it = 0; it < 60; ++it) {
      Point t = fixtures::random_inside(poly, rng);
      GeodesicPath via_tree = spt.query(t);
      GeodesicPath direct = shortest_path(poly, src, t);
      CHECK(same_vertices(via_tree.vertices, direct.vertices));
      CHECK(via_tree.length == doctest::Approx(direct.length).epsilon(1e-12));
      CHECK(spt.distance(t) == doctest::Approx(direct.length).epsilon(1e-12));
      if (!direct.degenerate())
        CHECK(spt.first_direction(t) == doctest::Approx(direct.first_dir()).epsilon(1e-12));
    }

    // Polygon vertices are also valid targets and have precomputed data.
    for (int v = 0; v < poly.size(); ++v) {
      GeodesicPath direct = shortest_path(poly, src, poly.vertex(v));
      CHECK(spt.vertex_distance(v) == doctest::Approx(direct.length).epsilon(1e-12));
      CHECK(spt.distance(poly.vertex(v)) == doctest::Approx(direct.length).epsilon(1e-12));
    }
  }
}

TEST_CASE("shortest path tree: pinned examples") {
  SimplePolygon l = fixtures::ell();
  ShortestPathTree spt(l, {1, 1});

  GeodesicPath p = spt.query({3, 3});
  CHECK(same_vertices(p.vertices, {{1, 1}, {2, 2}, {3, 3}}));
  CHECK(spt.first_direction({3, 3}) == doctest::Approx(kPi / 4).epsilon(1e-12));

  GeodesicPath shortp = spt.query({1, 1.5});
  CHECK(shortp.vertices.size() == 2);
  CHECK(shortp.length == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS((void)spt.first_direction({1, 1}), Error);

  SimplePolygon sq = fixtures::square();
  ShortestPathTree sspt(sq, {5, 5});
  CHECK(sspt.query({9, 9}).length == doctest::Approx(4 * kSqrt2).epsilon(1e-12));
  CHECK(sspt.query({5, 5}).degenerate());
}

TEST_CASE("extensions: stop at the boundary or at the cap") {
  SimplePolygon l = fixtures::ell();
  GeodesicPath p = shortest_path(l, {1, 1}, {3, 3});

  Segment back = ext_backward(l, p);
  CHECK(near(back.a, {0, 0}, 1e-9));
  CHECK(back.b == Point{1, 1});

  Segment capped = ext_backward(l, p, 0.5);
  CHECK(capped.length() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(capped.b == Point{1, 1});
  CHECK(near(capped.a, {1 - 0.25 * kSqrt2, 1 - 0.25 * kSqrt2}, 1e-12));

  // A cap beyond the boundary distance changes nothing.
  Segment big = ext_backward(l, p, 1000.0);
  CHECK(near(big.a, {0, 0}, 1e-9));

  SimplePolygon sq = fixtures::square();
  GeodesicPath q = shortest_path(sq, {5, 5}, {9, 9});
  Segment fwd = ext_forward(sq, q);
  CHECK(fwd.a == Point{9, 9});
  CHECK(near(fwd.b, {10, 10}, 1e-9));

  GeodesicPath zero = shortest_path(sq, {5, 5}, {5, 5});
  CHECK_THROWS_AS((void)ext_backward(sq, zero), Error);
  CHECK_THROWS_AS((void)ext_forward(sq, zero), Error);
}

TEST_CASE("span: connected arc of edge directions") {
  GeodesicPath collinear{{{1, 1}, {2, 2}, {3, 3}}, 2 * kSqrt2};
  Span s = span(collinear);
  CHECK(s.width() <= 1e-12);
  CHECK(s.contains(kPi / 4));

  GeodesicPath bent{{{1, 1}, {2, 2}, {2.5, 3.5}}, 0.0};
  Span sb = span(bent);
  CHECK(sb.start() == doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK(sb.width() == doctest::Approx(std::atan2(1.5, 0.5) - kPi / 4).epsilon(1e-9));
  CHECK(sb.contains(kPi / 4));
  CHECK(sb.contains(std::atan2(1.5, 0.5)));

  // Three edges at 10, 30, 50 degrees: the span is [10, 50] degrees.
  auto deg = [](double d) { return d * kPi / 180.0; };
  Point v0{0, 0};
  Point v1 = v0 + Point{std::cos(deg(10)), std::sin(deg(10))};
  Point v2 = v1 + Point{std::cos(deg(30)), std::sin(deg(30))};
  Point v3 = v2 + Point{std::cos(deg(50)), std::sin(deg(50))};
  Span st = span(GeodesicPath{{v0, v1, v2, v3}, 3.0});
  CHECK(st.start() == doctest::Approx(deg(10)).epsilon(1e-9));
  CHECK(st.width() == doctest::Approx(deg(40)).epsilon(1e-9));

  GeodesicPath degen{{{1, 1}}, 0.0};
  CHECK_THROWS_AS((void)span(degen), Error);
}

TEST_CASE("pseudo-triangle: immediate splits in a convex polygon") {
  SimplePolygon sq = fixtures::square();
  PseudoTriangle pt = pseudo_triangle(sq, {1, 1}, {9, 1}, {5, 8});
  CHECK_FALSE(pt.degenerate);
  CHECK(pt.p == Point{1, 1});
  CHECK(pt.q == Point{9, 1});
  CHECK(pt.r == Point{5, 8});
  CHECK(pt.side_pq.edge_count() == 1);
  CHECK(pt.side_qr.edge_count() == 1);
  CHECK(pt.side_rp.edge_count() == 1);
}

TEST_CASE("pseudo-triangle: shared bend becomes the split vertex") {
  // Both paths from (3,3) pass through the reflex corner (2,2): one bends
  // there, the other grazes it exactly. The corner is the split vertex.
  SimplePolygon l = fixtures::ell();
  PseudoTriangle pt = pseudo_triangle(l, {3, 3}, {0.5, 1.5}, {0.5, 0.5});
  CHECK_FALSE(pt.degenerate);
  CHECK(pt.p == Point{2, 2});
  CHECK(pt.q == Point{0.5, 1.5});
  CHECK(pt.r == Point{0.5, 0.5});
  CHECK(same_vertices(pt.side_pq.vertices, {{2, 2}, {0.5, 1.5}}));
  CHECK(same_vertices(pt.side_qr.vertices, {{0.5, 1.5}, {0.5, 0.5}}));
  CHECK(same_vertices(pt.side_rp.vertices, {{0.5, 0.5}, {2, 2}}));
}

TEST_CASE("pseudo-triangle: collinear corners are flagged degenerate") {
  SimplePolygon sq = fixtures::square();
  PseudoTriangle pt = pseudo_triangle(sq, {1, 1}, {5, 5}, {9, 9});
  CHECK(pt.degenerate);
  PseudoTriangle dup = pseudo_triangle(sq, {1, 1}, {1, 1}, {9, 9});
  CHECK(dup.degenerate);
}
