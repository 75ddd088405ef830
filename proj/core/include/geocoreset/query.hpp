#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "geocoreset/coreset.hpp"
#include "geocoreset/geodesic.hpp"
#include "geocoreset/geom.hpp"

namespace geocoreset {

// Result of a furthest-neighbor query: the winning point index into P, its
// geodesic distance from the query, and the realizing path (query first).
// distance always equals path.length.
struct QueryResult {
  int point = -1;
  double distance = 0.0;
  GeodesicPath path;
};

// Exact geodesic furthest neighbor of q among P. Distance ties within
// kDistTol resolve to the smallest index. Throws TooFewPoints (P empty) and
// PointOutside (q, or a point of P, outside the closed polygon).
QueryResult exact_fn(const SimplePolygon& poly, const std::vector<Point>& P, Point q);

// Furthest neighbor of q among the coreset points only (C.indices address P);
// same tie rule. Additionally throws EmptyCoreset.
QueryResult approx_fn(const SimplePolygon& poly, const std::vector<Point>& P, const Coreset& C,
                      Point q);

struct QueryRecord {
  Point q;
  int exact_point = -1;
  int approx_point = -1;
  double exact_d = 0.0;
  double approx_d = 0.0;
  double ratio = 1.0; // approx_d / exact_d; 1 when the exact distance is zero
};

struct VerificationReport {
  double eps = 0.0; // epsilon as built (after clamping)
  int coreset_size = 0;
  std::size_t size_bound = 0;
  std::vector<QueryRecord> records;
  std::optional<double> min_ratio; // absent when no queries ran
  std::vector<int> violations;     // records with ratio < 1 - eps - kDistTol
};

// Build the coreset once, then answer every query exactly and on the coreset
// and record the distance ratios. One shortest-path tree per point of P is
// shared across all queries (geodesic distance is symmetric), so the cost is
// |P| tree builds plus |queries| * |P| lookups.
VerificationReport verify_instance(const SimplePolygon& poly, const std::vector<Point>& P,
                                   double eps, const std::vector<Point>& queries,
                                   int threads = 1);

// Structural spot-checks of the machinery behind the approximation bound.
// For each query q with exact answer f = fn(q):
//   walk-back:  every point sampled on the backward extension of pi(q,f)
//               keeps f as a furthest neighbor (within kDistTol);
//   dichotomy:  pi(q,f) meets gamma or B, or else the backward extension
//               crosses gamma at a point where f is still furthest.
struct LemmaRecord {
  Point q;
  bool walkback_ok = true;
  int branch = 0; // 1 = path meets gamma/B, 2 = extension equality, 0 = neither
};

struct LemmaTallies {
  int walkback_samples = 0;
  int walkback_failures = 0;
  int dichotomy_queries = 0;
  int path_hits = 0;
  int extension_hits = 0;
  int dichotomy_failures = 0;
  std::vector<LemmaRecord> records; // one per query, in input order
};

LemmaTallies lemma_checks(const SimplePolygon& poly, const std::vector<Point>& P,
                          const std::vector<Point>& queries, int walkback_samples = 5);

} // namespace geocoreset
