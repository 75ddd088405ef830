#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "geocoreset/coreset.hpp"
#include "geocoreset/diameter.hpp"
#include "geocoreset/errors.hpp"
#include "geocoreset/query.hpp"

using namespace geocoreset;

namespace {

std::vector<Point> sample_points(const SimplePolygon& poly, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(fixtures::random_inside(poly, rng));
  return out;
}

const std::vector<Point> kCorners{{1, 1}, {9, 1}, {9, 9}, {1, 9}};

} // namespace

TEST_CASE("exact_fn finds the furthest point around a reflex corner") {
  auto poly = fixtures::ell();
  std::vector<Point> P{{1, 1}, {3, 3}, {3, 0.5}};
  auto r = exact_fn(poly, P, {0.5, 0.5});
  CHECK(r.point == 1); // (3,3), reached around the corner at (2,2)
  CHECK(r.distance == doctest::Approx(2.5 * std::sqrt(2.0)));
  CHECK(r.distance == doctest::Approx(r.path.length));
  REQUIRE(!r.path.vertices.empty());
  CHECK(near(r.path.vertices.front(), {0.5, 0.5}));
  CHECK(near(r.path.vertices.back(), {3, 3}));
  // the two direct candidates are strictly closer
  CHECK(dist(Point{0.5, 0.5}, P[0]) < r.distance);
  CHECK(dist(Point{0.5, 0.5}, P[2]) < r.distance);
}

TEST_CASE("exact_fn breaks distance ties by smallest index") {
  auto poly = fixtures::square();
  auto r = exact_fn(poly, kCorners, {5, 5});
  CHECK(r.point == 0); // all four corners tie at 4*sqrt(2)
  CHECK(r.distance == doctest::Approx(4.0 * std::sqrt(2.0)));
}

TEST_CASE("exact_fn with two points maps each onto the other") {
  auto poly = fixtures::square();
  std::vector<Point> P{{2, 2}, {7, 3}};
  auto a = exact_fn(poly, P, P[0]);
  CHECK(a.point == 1);
  CHECK(a.distance == doctest::Approx(dist(P[0], P[1])));
  auto b = exact_fn(poly, P, P[1]);
  CHECK(b.point == 0);
}

TEST_CASE("query error cases") {
  auto poly = fixtures::square();
  CHECK_THROWS_AS(exact_fn(poly, std::vector<Point>{}, {5, 5}), Error);
  try {
    exact_fn(poly, std::vector<Point>{}, {5, 5});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooFewPoints);
  }
  try {
    exact_fn(poly, kCorners, {-1, -1});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PointOutside);
  }

  auto C = build_coreset(poly, kCorners, 1.0);
  try {
    approx_fn(poly, kCorners, C, {11, 5});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PointOutside);
  }
  C.indices.clear();
  try {
    approx_fn(poly, kCorners, C, {5, 5});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyCoreset);
  }
}

TEST_CASE("approx_fn answers from the coreset only") {
  auto poly = fixtures::square();
  auto C = build_coreset(poly, kCorners, 1.0);
  REQUIRE(C.indices == std::vector<int>{0, 1, 2, 3}); // everything selected

  SUBCASE("full coreset reproduces the exact answer") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
      Point q = fixtures::random_inside(poly, rng);
      auto e = exact_fn(poly, kCorners, q);
      auto a = approx_fn(poly, kCorners, C, q);
      CHECK(a.point == e.point);
      CHECK(a.distance == doctest::Approx(e.distance));
      CHECK(a.distance <= e.distance + 1e-9);
    }
  }

  SUBCASE("a restricted coreset can only answer from its members") {
    C.indices = {2};
    auto a = approx_fn(poly, kCorners, C, {1.5, 1.5});
    CHECK(a.point == 2);
    CHECK(a.distance == doctest::Approx(dist(Point{1.5, 1.5}, kCorners[2])));
  }
}

TEST_CASE("querying from a coreset point stays above the diameter bound") {
  auto poly = fixtures::square();
  double eps = 0.5;
  auto C = build_coreset(poly, kCorners, eps);
  for (int idx : C.indices) {
    auto a = approx_fn(poly, kCorners, C, kCorners[static_cast<std::size_t>(idx)]);
    CHECK(a.distance >= (1.0 - eps) * C.diam.gamma.length / 2.0 - 1e-9);
  }
}

TEST_CASE("verify_instance certifies the approximation guarantee") {
  struct Shape {
    const char* name;
    SimplePolygon poly;
  };
  const Shape shapes[] = {
      {"square", fixtures::square()},     {"ell", fixtures::ell()},
      {"zigzag", fixtures::zigzag()},     {"spiked", fixtures::spiked()},
      {"scorridor", fixtures::scorridor()},
  };
  int shape_seed = 100;
  for (const auto& s : shapes) {
    CAPTURE(s.name);
    auto P = sample_points(s.poly, 18, static_cast<std::uint64_t>(shape_seed));
    auto queries = sample_points(s.poly, 25, static_cast<std::uint64_t>(shape_seed + 1));
    shape_seed += 2;
    for (double eps : {0.5, 0.2}) {
      CAPTURE(eps);
      auto rep = verify_instance(s.poly, P, eps, queries);
      CHECK(rep.eps == eps);
      CHECK(rep.coreset_size <= static_cast<int>(rep.size_bound));
      REQUIRE(rep.records.size() == queries.size());
      REQUIRE(rep.min_ratio.has_value());
      CHECK(rep.violations.empty());
      CHECK(*rep.min_ratio >= 1.0 - eps - 1e-9);
      for (const auto& rec : rep.records) {
        CHECK(rec.ratio > 0.0);
        CHECK(rec.ratio <= 1.0 + 1e-9);
        CHECK(rec.approx_d <= rec.exact_d + 1e-9);
        CHECK(rec.exact_point >= 0);
        CHECK(rec.approx_point >= 0);
      }
    }
  }
}

TEST_CASE("verify_instance with the whole set as coreset reports ratio one") {
  auto poly = fixtures::square();
  auto queries = sample_points(poly, 12, 9);
  auto rep = verify_instance(poly, kCorners, 1.0, queries);
  REQUIRE(rep.min_ratio.has_value());
  CHECK(*rep.min_ratio == doctest::Approx(1.0));
  for (const auto& rec : rep.records) {
    CHECK(rec.exact_point == rec.approx_point);
    CHECK(rec.exact_d == rec.approx_d); // same tree, same value
  }
}

TEST_CASE("verify_instance without queries leaves the ratio unset") {
  auto rep = verify_instance(fixtures::square(), kCorners, 0.5, {});
  CHECK(rep.records.empty());
  CHECK(!rep.min_ratio.has_value());
  CHECK(rep.violations.empty());
  CHECK(rep.coreset_size > 0);
}

TEST_CASE("verify_instance is deterministic across thread counts") {
  auto poly = fixtures::spiked();
  auto P = sample_points(poly, 15, 31);
  auto queries = sample_points(poly, 20, 32);
  auto a = verify_instance(poly, P, 0.4, queries, 1);
  auto b = verify_instance(poly, P, 0.4, queries, 4);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].exact_point == b.records[i].exact_point);
    CHECK(a.records[i].approx_point == b.records[i].approx_point);
    CHECK(a.records[i].exact_d == b.records[i].exact_d);
    CHECK(a.records[i].approx_d == b.records[i].approx_d);
    CHECK(a.records[i].ratio == b.records[i].ratio);
  }
  CHECK(a.min_ratio == b.min_ratio);
}

TEST_CASE("the furthest distance never drops below half the point diameter") {
  for (const auto* name : {"square", "zigzag", "scorridor"}) {
    CAPTURE(name);
    SimplePolygon poly = name == std::string("square")   ? fixtures::square()
                         : name == std::string("zigzag") ? fixtures::zigzag()
                                                         : fixtures::scorridor();
    auto P = sample_points(poly, 12, 55);
    auto diam = compute_diameter(poly, P);
    auto queries = sample_points(poly, 15, 56);
    for (Point q : queries) {
      auto r = exact_fn(poly, P, q);
      CHECK(r.distance >= diam.gamma.length / 2.0 - 1e-9);
    }
  }
}

TEST_CASE("walk-back and dichotomy checks hold across shapes") {
  struct Shape {
    const char* name;
    SimplePolygon poly;
  };
  const Shape shapes[] = {
      {"square", fixtures::square()},
      {"ell", fixtures::ell()},
      {"spiked", fixtures::spiked()},
      {"scorridor", fixtures::scorridor()},
  };
  int seed = 200;
  for (const auto& s : shapes) {
    CAPTURE(s.name);
    auto P = sample_points(s.poly, 10, static_cast<std::uint64_t>(seed));
    auto queries = sample_points(s.poly, 30, static_cast<std::uint64_t>(seed + 1));
    seed += 2;
    auto tal = lemma_checks(s.poly, P, queries);
    CHECK(tal.walkback_samples > 0);
    CHECK(tal.walkback_failures == 0);
    CHECK(tal.dichotomy_queries == 30);
    CHECK(tal.path_hits + tal.extension_hits == tal.dichotomy_queries);
    CHECK(tal.dichotomy_failures == 0);
    REQUIRE(tal.records.size() == queries.size());
    for (const auto& rec : tal.records) {
      CHECK(rec.walkback_ok);
      CHECK(rec.branch != 0);
    }
  }
}

TEST_CASE("a query on the diameter path itself lands in the path branch") {
  auto poly = fixtures::square();
  // (5,5) lies on both diagonals, so whichever diameter pair wins, the
  // realizing path runs along gamma.
  auto tal = lemma_checks(poly, kCorners, {{5, 5}});
  REQUIRE(tal.records.size() == 1);
  CHECK(tal.records[0].branch == 1);
  CHECK(tal.dichotomy_failures == 0);
  CHECK(tal.walkback_failures == 0);
}

TEST_CASE("lemma_checks parameters and errors") {
  auto poly = fixtures::square();
  SUBCASE("zero walk-back samples still runs the dichotomy") {
    auto tal = lemma_checks(poly, kCorners, {{2, 1}, {7, 6}}, 0);
    CHECK(tal.walkback_samples == 0);
    CHECK(tal.dichotomy_queries == 2);
    CHECK(tal.dichotomy_failures == 0);
  }
  SUBCASE("one point is not enough") {
    CHECK_THROWS_AS(lemma_checks(poly, {{5, 5}}, {{2, 2}}), Error);
  }
  SUBCASE("queries must be inside") {
    CHECK_THROWS_AS(lemma_checks(poly, kCorners, {{-3, 4}}), Error);
  }
}
