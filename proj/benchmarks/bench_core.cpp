#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "geocoreset/coreset.hpp"
#include "geocoreset/geodesic.hpp"
#include "geocoreset/geom.hpp"
#include "geocoreset/instance.hpp"

using namespace geocoreset;

namespace {

// Regular convex polygon with n vertices on a circle of radius 100.
SimplePolygon convex_ngon(int n) {
  std::vector<Point> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * 3.141592653589793 * i / n;
    v.push_back({100.0 * std::cos(a), 100.0 * std::sin(a)});
  }
  return SimplePolygon::validate(v);
}

// Comb polygon: many reflex vertices, forces long funnel chains.
SimplePolygon comb(int teeth) {
  std::vector<Point> v;
  v.push_back({0, 0});
  v.push_back({2.0 * teeth, 0});
  v.push_back({2.0 * teeth, 10});
  for (int i = teeth - 1; i >= 1; --i) {
    double x = 2.0 * i;
    v.push_back({x + 0.4, 10});
    v.push_back({x, 2});
    v.push_back({x - 0.4, 10});
  }
  v.push_back({0, 10});
  return SimplePolygon::validate(v);
}

std::vector<Point> sample_inside(const SimplePolygon& poly, int count, unsigned seed) {
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  for (int i = 0; i < poly.size(); ++i) {
    xlo = std::min(xlo, poly.vertex(i).x);
    xhi = std::max(xhi, poly.vertex(i).x);
    ylo = std::min(ylo, poly.vertex(i).y);
    yhi = std::max(yhi, poly.vertex(i).y);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(xlo, xhi), uy(ylo, yhi);
  std::vector<Point> out;
  while (static_cast<int>(out.size()) < count) {
    Point p{ux(rng), uy(rng)};
    if (poly.contains(p) == Containment::Interior) out.push_back(p);
  }
  return out;
}

void BM_ShortestPathConvex(benchmark::State& state) {
  SimplePolygon poly = convex_ngon(static_cast<int>(state.range(0)));
  std::vector<Point> pts = sample_inside(poly, 64, 1);
  size_t i = 0;
  for (auto _ : state) {
    const Point& a = pts[i % pts.size()];
    const Point& b = pts[(i + 17) % pts.size()];
    benchmark::DoNotOptimize(shortest_path(poly, a, b).length);
    ++i;
  }
}
BENCHMARK(BM_ShortestPathConvex)->Arg(64)->Arg(256)->Arg(1024);

void BM_ShortestPathComb(benchmark::State& state) {
  SimplePolygon poly = comb(static_cast<int>(state.range(0)));
  std::vector<Point> pts = sample_inside(poly, 64, 2);
  size_t i = 0;
  for (auto _ : state) {
    const Point& a = pts[i % pts.size()];
    const Point& b = pts[(i + 17) % pts.size()];
    benchmark::DoNotOptimize(shortest_path(poly, a, b).length);
    ++i;
  }
}
BENCHMARK(BM_ShortestPathComb)->Arg(8)->Arg(32)->Arg(128);

void BM_TreeQuery(benchmark::State& state) {
  SimplePolygon poly = comb(static_cast<int>(state.range(0)));
  std::vector<Point> pts = sample_inside(poly, 256, 3);
  ShortestPathTree spt(poly, pts[0]);
  size_t i = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spt.distance(pts[i % pts.size()]));
    ++i;
  }
}
BENCHMARK(BM_TreeQuery)->Arg(8)->Arg(32)->Arg(128);

// Tree vs brute-force cone maximizer over random interval families.
// range(0) = cone count k, range(1) = interval count.
std::vector<ReachInterval> random_intervals(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<ReachInterval> items;
  items.reserve(count);
  for (int i = 0; i < count; ++i) {
    double start = 2.0 * std::numbers::pi * uni(rng);
    double width = uni(rng) < 0.5 ? 0.3 * uni(rng) : std::numbers::pi * uni(rng);
    items.push_back({i, DirectionArc::from_start_width(start, width), 100.0 * uni(rng)});
  }
  return items;
}

CanonicalCones uniform_cones(int k) {
  CanonicalCones cones;
  cones.k = k;
  for (int j = 0; j < k; ++j)
    cones.cones.push_back(DirectionArc::from_start_width(2.0 * std::numbers::pi * j / k,
                                                         2.0 * std::numbers::pi / k));
  return cones;
}

void BM_ConeMaxTree(benchmark::State& state) {
  CanonicalCones cones = uniform_cones(static_cast<int>(state.range(0)));
  auto items = random_intervals(static_cast<int>(state.range(1)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(cone_max(cones, items));
}
BENCHMARK(BM_ConeMaxTree)->Args({63, 100})->Args({63, 2000})->Args({252, 2000})->Args({252, 20000});

void BM_ConeMaxBrute(benchmark::State& state) {
  CanonicalCones cones = uniform_cones(static_cast<int>(state.range(0)));
  auto items = random_intervals(static_cast<int>(state.range(1)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(cone_max_brute(cones, items));
}
BENCHMARK(BM_ConeMaxBrute)->Args({63, 100})->Args({63, 2000})->Args({252, 2000});

// End-to-end construction across point counts and eps.
// range(0) = point count, range(1) = eps in permille.
void BM_BuildCoreset(benchmark::State& state) {
  SimplePolygon poly = gen_polygon(PolygonKind::Random2Opt, 40, 7);
  std::vector<Point> pts = gen_points(poly, static_cast<int>(state.range(0)), 8);
  double eps = static_cast<double>(state.range(1)) / 1000.0;
  for (auto _ : state) {
    Coreset c = build_coreset(poly, pts, eps, 1);
    benchmark::DoNotOptimize(c.indices.data());
  }
}
BENCHMARK(BM_BuildCoreset)
    ->Args({200, 500})
    ->Args({200, 100})
    ->Args({2000, 500})
    ->Args({2000, 200})
    ->Args({2000, 100})
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
