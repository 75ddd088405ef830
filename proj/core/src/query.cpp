#include "geocoreset/query.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>
#include <utility>

#include "geocoreset/diameter.hpp"
#include "geocoreset/errors.hpp"

namespace geocoreset {

namespace {

void require_inside(const SimplePolygon& poly, Point q) {
  if (poly.contains(q) == Containment::Exterior)
    throw Error(Errc::PointOutside, "query point lies outside the polygon");
}

// Largest distance with the smallest-index tie rule: the first index whose
// distance reaches the maximum minus kDistTol wins.
template <class Ids>
int pick_furthest(const Ids& ids, const std::vector<double>& d) {
  double best = -1.0;
  for (int i : ids) best = std::max(best, d[static_cast<std::size_t>(i)]);
  for (int i : ids)
    if (d[static_cast<std::size_t>(i)] >= best - kDistTol) return i;
  return -1; // unreachable for nonempty ids
}

struct AllIds {
  int n;
  struct It {
    int v;
    int operator*() const { return v; }
    It& operator++() { ++v; return *this; }
    bool operator!=(It o) const { return v != o.v; }
  };
  It begin() const { return {0}; }
  It end() const { return {n}; }
};

QueryResult result_for(const ShortestPathTree& spt, const std::vector<Point>& P, int idx) {
  QueryResult r;
  r.point = idx;
  r.path = spt.query(P[static_cast<std::size_t>(idx)]);
  r.distance = r.path.length;
  return r;
}

// Intersection point of two segments known to meet: a proper crossing gets
// the line-line solution; a near-parallel touch falls back to whichever
// endpoint lies on both segments.
Point meeting_point(const Segment& s, const Segment& t) {
  Point r = s.b - s.a, u = t.b - t.a;
  double den = cross(r, u);
  if (std::abs(den) > 1e-12 * (norm(r) * norm(u) + 1.0)) {
    double tt = std::clamp(cross(t.a - s.a, u) / den, 0.0, 1.0);
    return s.at(tt);
  }
  for (Point c : {t.a, t.b, s.a, s.b})
    if (point_segment_dist(c, s) <= kDistTol && point_segment_dist(c, t) <= kDistTol) return c;
  return s.at(closest_param(t.a, s));
}

} // namespace

QueryResult exact_fn(const SimplePolygon& poly, const std::vector<Point>& P, Point q) {
  if (P.empty())
    throw Error(Errc::TooFewPoints, "furthest-neighbor query over an empty point set");
  require_inside(poly, q);
  ShortestPathTree spt(poly, q);
  std::vector<double> d(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) d[i] = spt.distance(P[i]);
  return result_for(spt, P, pick_furthest(AllIds{static_cast<int>(P.size())}, d));
}

QueryResult approx_fn(const SimplePolygon& poly, const std::vector<Point>& P, const Coreset& C,
                      Point q) {
  if (C.indices.empty()) throw Error(Errc::EmptyCoreset, "coreset has no points");
  if (C.indices.back() >= static_cast<int>(P.size()))
    throw Error(Errc::Internal, "coreset indices do not address this point set");
  require_inside(poly, q);
  ShortestPathTree spt(poly, q);
  std::vector<double> d(P.size(), -1.0);
  for (int i : C.indices) d[static_cast<std::size_t>(i)] = spt.distance(P[static_cast<std::size_t>(i)]);
  return result_for(spt, P, pick_furthest(C.indices, d));
}

VerificationReport verify_instance(const SimplePolygon& poly, const std::vector<Point>& P,
                                   double eps, const std::vector<Point>& queries, int threads) {
  Coreset C = build_coreset(poly, P, eps, threads);

  VerificationReport rep;
  rep.eps = C.eps;
  rep.coreset_size = static_cast<int>(C.indices.size());
  rep.size_bound = C.size_bound;
  rep.records.resize(queries.size());
  if (queries.empty()) return rep;

  // one tree per point, shared across queries (distance is symmetric)
  std::vector<std::unique_ptr<ShortestPathTree>> spts;
  spts.reserve(P.size());
  for (Point p : P) spts.push_back(std::make_unique<ShortestPathTree>(poly, p));

  auto run_query = [&](std::size_t qi) {
    Point q = queries[qi];
    require_inside(poly, q);
    std::vector<double> d(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) d[i] = spts[i]->distance_unchecked(q);
    int ei = pick_furthest(AllIds{static_cast<int>(P.size())}, d);
    int ai = pick_furthest(C.indices, d);
    QueryRecord& rec = rep.records[qi];
    rec.q = q;
    rec.exact_point = ei;
    rec.approx_point = ai;
    rec.exact_d = d[static_cast<std::size_t>(ei)];
    rec.approx_d = d[static_cast<std::size_t>(ai)];
    rec.ratio = rec.exact_d > 0.0 ? rec.approx_d / rec.exact_d : 1.0;
  };

  if (threads <= 1 || queries.size() == 1) {
    for (std::size_t qi = 0; qi < queries.size(); ++qi) run_query(qi);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
      for (;;) {
        std::size_t qi = next.fetch_add(1);
        if (qi >= queries.size()) return;
        try {
          run_query(qi);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    int nt = std::min<int>(threads, static_cast<int>(queries.size()));
    pool.reserve(static_cast<std::size_t>(nt));
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  double mn = rep.records.front().ratio;
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    mn = std::min(mn, rep.records[i].ratio);
    if (rep.records[i].ratio < 1.0 - rep.eps - kDistTol)
      rep.violations.push_back(static_cast<int>(i));
  }
  rep.min_ratio = mn;
  return rep;
}

LemmaTallies lemma_checks(const SimplePolygon& poly, const std::vector<Point>& P,
                          const std::vector<Point>& queries, int walkback_samples) {
  if (P.size() < 2)
    throw Error(Errc::TooFewPoints, "lemma checks need at least two points");

  Diameter diam = compute_diameter(poly, P);
  GammaStar star = extend_gamma(poly, diam.gamma);
  BoundarySet bset = build_B(poly, diam.gamma, star);

  std::vector<Segment> gamma_edges;
  for (std::size_t e = 0; e + 1 < diam.gamma.vertices.size(); ++e)
    gamma_edges.push_back({diam.gamma.vertices[e], diam.gamma.vertices[e + 1]});
  std::vector<Segment> targets = gamma_edges; // gamma plus B
  targets.insert(targets.end(), bset.segments.begin(), bset.segments.end());

  std::vector<std::unique_ptr<ShortestPathTree>> spts;
  spts.reserve(P.size());
  for (Point p : P) spts.push_back(std::make_unique<ShortestPathTree>(poly, p));
  auto max_dist = [&](Point z) {
    double m = 0.0;
    for (const auto& t : spts) m = std::max(m, t->distance_unchecked(z));
    return m;
  };

  LemmaTallies tal;
  tal.records.reserve(queries.size());
  for (Point q : queries) {
    require_inside(poly, q);
    LemmaRecord rec;
    rec.q = q;

    std::vector<double> d(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) d[i] = spts[i]->distance_unchecked(q);
    int ei = pick_furthest(AllIds{static_cast<int>(P.size())}, d);
    GeodesicPath path = spts[static_cast<std::size_t>(ei)]->query(q).reversed(); // q -> fn(q)
    if (path.degenerate()) { // every point coincides with q
      tal.records.push_back(rec);
      continue;
    }

    Segment back = ext_backward(poly, path); // {boundary stop, q}
    if (back.length() > kDistTol) {
      for (int s = 1; s <= walkback_samples; ++s) {
        Point qs = back.at(static_cast<double>(s) / (walkback_samples + 1));
        ++tal.walkback_samples;
        double have = spts[static_cast<std::size_t>(ei)]->distance_unchecked(qs);
        if (std::abs(have - max_dist(qs)) > kDistTol) {
          ++tal.walkback_failures;
          rec.walkback_ok = false;
        }
      }
    }

    ++tal.dichotomy_queries;
    bool hit = false;
    for (int e = 0; e < path.edge_count() && !hit; ++e) {
      Segment pe{path.vertices[static_cast<std::size_t>(e)],
                 path.vertices[static_cast<std::size_t>(e) + 1]};
      for (const Segment& t : targets) {
        if (segments_intersect(pe, t)) {
          hit = true;
          break;
        }
      }
    }
    if (hit) {
      rec.branch = 1;
      ++tal.path_hits;
    } else {
      bool equal_max = false;
      for (const Segment& g : gamma_edges) {
        if (!segments_intersect(back, g)) continue;
        Point z = meeting_point(back, g);
        double have = spts[static_cast<std::size_t>(ei)]->distance_unchecked(z);
        if (std::abs(have - max_dist(z)) <= kDistTol) {
          equal_max = true;
          break;
        }
      }
      if (equal_max) {
        rec.branch = 2;
        ++tal.extension_hits;
      } else {
        ++tal.dichotomy_failures;
      }
    }
    tal.records.push_back(rec);
  }
  return tal;
}

} // namespace geocoreset
