#include "geocoreset/coreset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>

namespace geocoreset {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

CanonicalCones canonical_cones(double eps) {
  if (!(eps > 0.0)) throw Error(Errc::BadEpsilon, "eps must be positive");
  if (eps > 1.0) eps = 1.0;
  CanonicalCones cc;
  cc.k = static_cast<int>(std::ceil(4.0 * std::numbers::pi / eps));
  cc.cones.reserve(cc.k);
  for (int j = 0; j < cc.k; ++j)
    cc.cones.push_back(DirectionArc::from_start_width(kTwoPi * j / cc.k, kTwoPi / cc.k));
  return cc;
}

// --- reach intervals ----------------------------------------------------

namespace {

// Smallest arc containing every direction: the complement of the largest
// gap between cyclically consecutive directions.
DirectionArc hull_arc(std::vector<double> dirs) {
  for (double& d : dirs) d = norm_angle(d);
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  if (dirs.size() == 1) return DirectionArc::from_start_width(dirs[0], 0.0);
  double best_gap = -1.0;
  size_t at = 0;
  for (size_t i = 0; i < dirs.size(); ++i) {
    double next = (i + 1 < dirs.size()) ? dirs[i + 1] : dirs[0] + kTwoPi;
    double gap = next - dirs[i];
    if (gap > best_gap) {
      best_gap = gap;
      at = i;
    }
  }
  double start = dirs[(at + 1) % dirs.size()];
  return DirectionArc::from_start_width(start, kTwoPi - best_gap);
}

// The arc dir(x,p) traces as x moves along the edge. Generically both
// endpoint directions point strictly into the open half-plane on p's side
// of the edge's supporting line, and since two directions inside one open
// half-circle are never antipodal, the traced arc is the unique < pi arc
// between them. Anything else -- p collinear with the edge line, a
// direction collinear with the edge or on the wrong side (paths that start
// out along the cut at a bend), near-antipodal directions -- falls back to
// the hull of sampled directions, which can only over-include.
DirectionArc traced_arc(const Segment& edge, Point p, double theta_a, double theta_b,
                        int samples, const std::function<double(int, double)>& sample_dir) {
  Point ev = edge.b - edge.a;
  double elen = norm(ev);
  double off = cross(ev, p - edge.a) / elen; // signed distance to the supporting line
  bool ambiguous = std::abs(off) <= kDistTol;
  if (!ambiguous) {
    Point n{-ev.y / elen, ev.x / elen}; // unit normal toward p
    if (off < 0.0) n = {-n.x, -n.y};
    double sa = std::cos(theta_a) * n.x + std::sin(theta_a) * n.y;
    double sb = std::cos(theta_b) * n.x + std::sin(theta_b) * n.y;
    ambiguous = sa <= kAngleTol || sb <= kAngleTol;
  }
  if (!ambiguous) {
    double d = norm_angle(theta_b - theta_a);
    if (std::abs(d - std::numbers::pi) <= kAngleTol)
      ambiguous = true;
    else if (d < std::numbers::pi)
      return DirectionArc::ccw(theta_a, theta_b);
    else
      return DirectionArc::ccw(theta_b, theta_a);
  }
  std::vector<double> dirs{theta_a, theta_b};
  dirs.reserve(samples + 2);
  for (int i = 0; i < samples; ++i) {
    double t = (i + 1.0) / (samples + 1.0);
    dirs.push_back(sample_dir(i, t));
  }
  return hull_arc(std::move(dirs));
}

} // namespace

ReachInterval reach_interval(const SimplePolygon& poly, const Segment& edge, Point anchor,
                             Point p, int samples) {
  if (edge.length() <= kDistTol)
    throw Error(Errc::DegenerateAnchor, "anchor edge is degenerate");
  if (point_segment_dist(p, edge) <= kDistTol)
    throw Error(Errc::DegenerateAnchor, "point lies on the anchor edge");
  double ta = shortest_path(poly, edge.a, p).first_dir();
  double tb = shortest_path(poly, edge.b, p).first_dir();
  ReachInterval ri;
  ri.weight = shortest_path(poly, anchor, p).length;
  ri.arc = traced_arc(edge, p, ta, tb, samples, [&](int, double t) {
    return shortest_path(poly, edge.at(t), p).first_dir();
  });
  return ri;
}

// --- per-cone maxima ----------------------------------------------------

namespace {

ConeBest better(ConeBest a, ConeBest b) {
  if (a.point < 0) return b;
  if (b.point < 0) return a;
  if (a.weight != b.weight) return a.weight > b.weight ? a : b;
  return a.point <= b.point ? a : b;
}

} // namespace

std::vector<ConeBest> cone_max_brute(const CanonicalCones& cones,
                                     const std::vector<ReachInterval>& items) {
  std::vector<ConeBest> out(cones.cones.size());
  for (size_t j = 0; j < cones.cones.size(); ++j)
    for (const ReachInterval& it : items)
      if (it.arc.intersects(cones.cones[j]))
        out[j] = better(out[j], ConeBest{it.point, it.weight});
  return out;
}

std::vector<ConeBest> cone_max(const CanonicalCones& cones,
                               const std::vector<ReachInterval>& items) {
  int k = static_cast<int>(cones.cones.size());
  if (k == 0) return {};
  int base = 1;
  while (base < k) base <<= 1;
  std::vector<ConeBest> node(2 * base);

  // Range chmax over [l, r] (inclusive leaves); queries read the root path.
  auto update = [&](int l, int r, ConeBest v) {
    for (l += base, r += base + 1; l < r; l >>= 1, r >>= 1) {
      if (l & 1) node[l] = better(node[l], v), ++l;
      if (r & 1) --r, node[r] = better(node[r], v);
    }
  };

  double delta = kTwoPi / k;
  for (const ReachInterval& it : items) {
    int jf, jl, len;
    if (it.arc.width() >= kTwoPi - kAngleTol) {
      jf = 0;
      jl = k - 1;
      len = k;
    } else {
      // Seed the cone range arithmetically, then widen it with the same
      // closed-intersection predicate the brute force uses, so the two
      // implementations agree even at cone boundaries.
      double s = it.arc.start();
      jf = std::min(k - 1, static_cast<int>(std::floor(s / delta))) % k;
      jl = static_cast<int>(std::floor((s + it.arc.width()) / delta)) % k;
      len = (jl - jf + k) % k + 1;
      while (len < k && it.arc.intersects(cones.cones[(jf + k - 1) % k])) {
        jf = (jf + k - 1) % k;
        ++len;
      }
      while (len < k && it.arc.intersects(cones.cones[(jl + 1) % k])) {
        jl = (jl + 1) % k;
        ++len;
      }
    }
    ConeBest v{it.point, it.weight};
    if (len == k)
      update(0, k - 1, v);
    else if (jf <= jl)
      update(jf, jl, v);
    else {
      update(jf, k - 1, v);
      update(0, jl, v);
    }
  }

  std::vector<ConeBest> out(k);
  for (int j = 0; j < k; ++j) {
    ConeBest b;
    for (int x = j + base; x >= 1; x >>= 1) b = better(b, node[x]);
    out[j] = b;
  }
  return out;
}

// --- provenance ---------------------------------------------------------

std::string CoresetPoint::tag() const {
  char buf[64];
  switch (kind) {
    case SelKind::DiameterEndpoint:
      std::snprintf(buf, sizeof buf, "diam");
      break;
    case SelKind::R:
      std::snprintf(buf, sizeof buf, "R(%d,%d)", piece, side);
      break;
    case SelKind::X:
      std::snprintf(buf, sizeof buf, "X(%d,%d)", piece, side);
      break;
    case SelKind::Alpha:
      std::snprintf(buf, sizeof buf, "A(%d,%d)", piece, side);
      break;
    case SelKind::F:
      std::snprintf(buf, sizeof buf, "F(%d,%d,%d)", piece, cone, side);
      break;
    case SelKind::L:
      std::snprintf(buf, sizeof buf, "L(%d,%d,%d)", piece, cone, side);
      break;
    case SelKind::BCone:
      std::snprintf(buf, sizeof buf, "B(%d,%d,%d,%d)", seg, piece, cone, side);
      break;
  }
  std::string s = buf;
  if (round > 0) s += "@" + std::to_string(round);
  return s;
}

// --- size bound ---------------------------------------------------------

std::size_t coreset_size_bound(double eps, double gamma_len,
                               const std::vector<double>& b_segment_lengths) {
  if (!(eps > 0.0)) throw Error(Errc::BadEpsilon, "eps must be positive");
  if (eps > 1.0) eps = 1.0;
  auto ell = static_cast<std::size_t>(std::ceil(6.0 / eps));
  auto k = static_cast<std::size_t>(std::ceil(4.0 * std::numbers::pi / eps));
  std::size_t total = ell * (4 * k + 6) + 2;
  for (double len : b_segment_lengths) {
    if (len <= 0.0 || gamma_len <= 0.0) continue;
    total += static_cast<std::size_t>(std::ceil(6.0 * len / (eps * gamma_len))) * 2 * k;
  }
  return total;
}

// --- selection machinery --------------------------------------------------

namespace {

// Per-point placement relative to the cut, computed once per build. The
// assignment is exclusive (points on the cut go to side 1, matching
// SideDecomposition::side_of), so every point keeps full candidacy in
// exactly one side's selections and is never dropped from both.
struct PointSides {
  std::vector<int> side;       // 1 or 2 (cut points report 1)
  std::vector<char> on_cut;
  std::vector<int> component;  // side component containing the point, -1 = none
};

PointSides classify_points(const SideDecomposition& sides, const std::vector<Point>& P) {
  PointSides ps;
  int n = static_cast<int>(P.size());
  ps.side.resize(n);
  ps.on_cut.resize(n);
  ps.component.resize(n);
  for (int i = 0; i < n; ++i) {
    ps.on_cut[i] = sides.on_cut(P[i]) ? 1 : 0;
    ps.component[i] = sides.component_of(P[i]);
    // Same rule as SideDecomposition::side_of, reusing the two lookups.
    ps.side[i] =
        (ps.on_cut[i] || ps.component[i] < 0) ? 1 : sides.components[ps.component[i]].side;
  }
  return ps;
}

bool in_side(const PointSides& ps, int ip, int s) { return ps.side[ip] == s; }

// Lazily built shortest-path trees at the interior sample points of one
// anchor edge, shared by every point of that edge that needs the sampling
// fallback (building a tree once beats one path query per fallback point).
class EdgeSampler {
public:
  EdgeSampler(const SimplePolygon& poly, const Segment& edge, int samples)
      : poly_(&poly), edge_(edge), spts_(samples) {}

  double dir(int i, double t, Point p) {
    if (!spts_[i]) spts_[i] = std::make_unique<ShortestPathTree>(*poly_, edge_.at(t));
    return spts_[i]->first_direction_unchecked(p);
  }

private:
  const SimplePolygon* poly_;
  Segment edge_;
  std::vector<std::unique_ptr<ShortestPathTree>> spts_;
};

constexpr int kFallbackSamples = 8;

// Reach intervals of every point for one anchor edge. Points on the edge
// itself have no interval and are skipped; the r-type selections still rank
// them, so they are never lost outright.
std::vector<ReachInterval> edge_reach_items(const SimplePolygon& poly,
                                            const std::vector<Point>& P, const Segment& edge,
                                            const ShortestPathTree& spt_a,
                                            const ShortestPathTree& spt_b,
                                            const std::vector<double>& weight) {
  std::vector<ReachInterval> items;
  items.reserve(P.size());
  EdgeSampler sampler(poly, edge, kFallbackSamples);
  for (int ip = 0; ip < static_cast<int>(P.size()); ++ip) {
    if (point_segment_dist(P[ip], edge) <= kDistTol) continue;
    double ta = spt_a.first_direction_unchecked(P[ip]);
    double tb = spt_b.first_direction_unchecked(P[ip]);
    ReachInterval ri;
    ri.point = ip;
    ri.weight = weight[ip];
    ri.arc = traced_arc(edge, P[ip], ta, tb, kFallbackSamples,
                        [&](int i, double t) { return sampler.dir(i, t, P[ip]); });
    items.push_back(ri);
  }
  return items;
}

// Cone selections for one anchor edge, both sides.
void emit_cone_selections(const CanonicalCones& cones, const std::vector<ReachInterval>& items,
                          const PointSides& ps, SelKind kind, int piece, int seg,
                          std::vector<CoresetPoint>& out) {
  for (int s = 1; s <= 2; ++s) {
    std::vector<ReachInterval> filtered;
    filtered.reserve(items.size());
    for (const ReachInterval& it : items)
      if (in_side(ps, it.point, s)) filtered.push_back(it);
    std::vector<ConeBest> best = cone_max(cones, filtered);
    for (int j = 0; j < static_cast<int>(best.size()); ++j)
      if (best[j].point >= 0)
        out.push_back(CoresetPoint{
            .point = best[j].point, .kind = kind, .piece = piece, .side = s, .cone = j, .seg = seg});
  }
}

int find_polygon_vertex(const SimplePolygon& poly, Point q) {
  for (int i = 0; i < poly.size(); ++i)
    if (poly.vertex(i) == q) return i;
  for (int i = 0; i < poly.size(); ++i)
    if (near(poly.vertex(i), q)) return i;
  return -1;
}

std::vector<CoresetPoint> piece_set_impl(const SimplePolygon& poly, const std::vector<Point>& P,
                                         const Coreset& ctx, int pi, const PointSides& ps,
                                         const CanonicalCones& cones) {
  const Piece& piece = ctx.pieces[pi];
  const std::vector<Point>& ch = piece.chain;
  int n = static_cast<int>(P.size());
  std::vector<CoresetPoint> out;

  // All weights in a piece are geodesic distances from its start anchor.
  ShortestPathTree spt_g(poly, ch.front());
  std::vector<double> dg(n);
  for (int ip = 0; ip < n; ++ip) dg[ip] = spt_g.distance_unchecked(P[ip]);

  auto argmax = [&](auto&& keep) {
    int best = -1;
    for (int ip = 0; ip < n; ++ip)
      if (keep(ip) && (best < 0 || dg[ip] > dg[best])) best = ip;
    return best;
  };

  PieceClassification cls = pocket_and_edge_classify(ctx.sides, ctx.diam.gamma, piece);

  // Intermediate edge: furthest point in each closed half-polygon, sides of
  // the cut ignored. The edge endpoints are reflex polygon vertices, so the
  // halves are the two boundary walks between them plus the chord.
  if (!cls.intermediate_edges.empty()) {
    const Segment& e = cls.intermediate_edges.front();
    int iu = find_polygon_vertex(poly, e.a);
    int iv = find_polygon_vertex(poly, e.b);
    if (iu >= 0 && iv >= 0 && iu != iv) {
      for (int half = 1; half <= 2; ++half) {
        std::vector<Point> ring;
        int from = half == 1 ? iu : iv;
        int to = half == 1 ? iv : iu;
        for (int i = from;; i = poly.index(i + 1)) {
          ring.push_back(poly.vertex(i));
          if (i == to) break;
        }
        if (ring.size() < 3) continue;
        int best = argmax([&](int ip) { return ring_contains(ring, P[ip]) != Containment::Exterior; });
        if (best >= 0)
          out.push_back(CoresetPoint{.point = best, .kind = SelKind::Alpha, .piece = pi, .side = half});
      }
    }
  }

  // Pocket membership once per point (side-independent).
  std::vector<char> in_pocket(n, 0);
  if (!cls.pockets.empty())
    for (int ip = 0; ip < n; ++ip)
      in_pocket[ip] = std::find(cls.pockets.begin(), cls.pockets.end(), ps.component[ip]) !=
                      cls.pockets.end();

  for (int s = 1; s <= 2; ++s) {
    int r = argmax([&](int ip) { return in_side(ps, ip, s); });
    if (r >= 0) out.push_back(CoresetPoint{.point = r, .kind = SelKind::R, .piece = pi, .side = s});
    int x = argmax([&](int ip) { return in_pocket[ip] && in_side(ps, ip, s); });
    if (x >= 0) out.push_back(CoresetPoint{.point = x, .kind = SelKind::X, .piece = pi, .side = s});
  }

  // Cone selections from the first and last piece edges.
  Segment fe{ch.front(), ch[1]};
  ShortestPathTree spt_f(poly, ch[1]);
  std::vector<ReachInterval> items_f = edge_reach_items(poly, P, fe, spt_g, spt_f, dg);
  emit_cone_selections(cones, items_f, ps, SelKind::F, pi, -1, out);

  if (ch.size() == 2) {
    // One-edge piece: the last edge is the first edge.
    emit_cone_selections(cones, items_f, ps, SelKind::L, pi, -1, out);
  } else {
    Segment le{ch[ch.size() - 2], ch.back()};
    std::optional<ShortestPathTree> spt_l;
    const ShortestPathTree* sa = &spt_f;
    if (ch.size() > 3) {
      spt_l.emplace(poly, ch[ch.size() - 2]);
      sa = &*spt_l;
    }
    ShortestPathTree spt_e(poly, ch.back());
    std::vector<ReachInterval> items_l = edge_reach_items(poly, P, le, *sa, spt_e, dg);
    emit_cone_selections(cones, items_l, ps, SelKind::L, pi, -1, out);
  }
  return out;
}

// Cone selections along one B segment, split into equal sub-pieces no longer
// than (eps/6)*|gamma|; each sub-piece is anchored (for weights and for the
// provenance) at its smaller-parameter endpoint.
std::vector<CoresetPoint> b_segment_impl(const SimplePolygon& poly, const std::vector<Point>& P,
                                         const Coreset& ctx, int si, const PointSides& ps,
                                         const CanonicalCones& cones) {
  std::vector<CoresetPoint> out;
  const Segment& s = ctx.bset.segments[si];
  double len = s.length();
  double glen = ctx.diam.length;
  if (len <= kDistTol || glen <= 0.0) return out;
  int nd = static_cast<int>(std::ceil(6.0 * len / (ctx.eps * glen)));
  int n = static_cast<int>(P.size());

  auto spt_a = std::make_unique<ShortestPathTree>(poly, s.at(0.0));
  std::vector<double> wa(n);
  for (int d = 0; d < nd; ++d) {
    auto spt_b = std::make_unique<ShortestPathTree>(poly, s.at((d + 1.0) / nd));
    Segment sub{s.at(static_cast<double>(d) / nd), s.at((d + 1.0) / nd)};
    if (sub.length() > kDistTol) {
      for (int ip = 0; ip < n; ++ip) wa[ip] = spt_a->distance_unchecked(P[ip]);
      std::vector<ReachInterval> items = edge_reach_items(poly, P, sub, *spt_a, *spt_b, wa);
      emit_cone_selections(cones, items, ps, SelKind::BCone, d, si, out);
    }
    spt_a = std::move(spt_b);
  }
  return out;
}

} // namespace

std::vector<CoresetPoint> build_piece_set(const SimplePolygon& poly,
                                          const std::vector<Point>& P, const Coreset& ctx,
                                          int piece_index) {
  if (piece_index < 0 || piece_index >= static_cast<int>(ctx.pieces.size()))
    throw Error(Errc::Internal, "piece index out of range");
  return piece_set_impl(poly, P, ctx, piece_index, classify_points(ctx.sides, P),
                        canonical_cones(ctx.eps));
}

std::vector<CoresetPoint> build_B_set(const SimplePolygon& poly, const std::vector<Point>& P,
                                      const Coreset& ctx) {
  PointSides ps = classify_points(ctx.sides, P);
  CanonicalCones cones = canonical_cones(ctx.eps);
  std::vector<CoresetPoint> out;
  for (int si = 0; si < static_cast<int>(ctx.bset.segments.size()); ++si) {
    std::vector<CoresetPoint> part = b_segment_impl(poly, P, ctx, si, ps, cones);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Coreset build_coreset(const SimplePolygon& poly, const std::vector<Point>& P, double eps,
                      int threads) {
  if (P.size() < 2) throw Error(Errc::TooFewPoints, "coreset needs at least two points");
  if (!(eps > 0.0)) throw Error(Errc::BadEpsilon, "eps must be positive");
  double e = std::min(eps, 1.0);
  for (const Point& p : P)
    if (poly.contains(p) == Containment::Exterior)
      throw Error(Errc::PointOutside, "input point lies outside the polygon");

  Coreset c;
  c.eps = e;
  c.diam = compute_diameter(poly, P);
  c.star = extend_gamma(poly, c.diam.gamma);
  c.sides = side_split(poly, c.star);
  c.pieces = split_pieces(c.diam.gamma, e);
  c.bset = build_B(poly, c.diam.gamma, c.star);
  CanonicalCones cones = canonical_cones(e);
  c.k = cones.k;
  c.ell = static_cast<int>(c.pieces.size());

  std::vector<double> blens;
  blens.reserve(c.bset.segments.size());
  for (const Segment& s : c.bset.segments) blens.push_back(s.length());
  c.size_bound = coreset_size_bound(e, c.diam.length, blens);

  PointSides ps = classify_points(c.sides, P);

  // One work unit per piece plus one per B segment; each fills its own slot,
  // so the merged output does not depend on scheduling.
  int units = c.ell + static_cast<int>(c.bset.segments.size());
  std::vector<std::vector<CoresetPoint>> slots(units);
  auto run_unit = [&](int u) {
    slots[u] = u < c.ell ? piece_set_impl(poly, P, c, u, ps, cones)
                         : b_segment_impl(poly, P, c, u - c.ell, ps, cones);
  };

  if (threads > 1 && units > 1) {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
      try {
        for (int u = next.fetch_add(1); u < units; u = next.fetch_add(1)) run_unit(u);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    int nw = std::min(threads, units);
    pool.reserve(nw);
    for (int w = 0; w < nw; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  } else {
    for (int u = 0; u < units; ++u) run_unit(u);
  }

  c.log.push_back(CoresetPoint{.point = c.diam.p1_index, .kind = SelKind::DiameterEndpoint});
  c.log.push_back(CoresetPoint{.point = c.diam.p2_index, .kind = SelKind::DiameterEndpoint});
  for (const std::vector<CoresetPoint>& slot : slots)
    c.log.insert(c.log.end(), slot.begin(), slot.end());

  c.indices.reserve(c.log.size());
  for (const CoresetPoint& cp : c.log) c.indices.push_back(cp.point);
  std::sort(c.indices.begin(), c.indices.end());
  c.indices.erase(std::unique(c.indices.begin(), c.indices.end()), c.indices.end());
  return c;
}

Coreset build_outlier_coreset(const SimplePolygon& poly, const std::vector<Point>& P,
                              double eps, int z, int threads) {
  if (z < 0) throw Error(Errc::Internal, "negative outlier count");
  if (P.size() < 2) throw Error(Errc::TooFewPoints, "coreset needs at least two points");

  std::vector<int> remaining(P.size());
  std::iota(remaining.begin(), remaining.end(), 0);

  Coreset out;
  for (int r = 0; r <= z && !remaining.empty(); ++r) {
    if (remaining.size() == 1) {
      // Keep the lone survivor rather than dropping it: a point removed from
      // no round would silently weaken the outlier guarantee.
      out.log.push_back(
          CoresetPoint{.point = remaining[0], .kind = SelKind::DiameterEndpoint, .round = r});
      out.indices.push_back(remaining[0]);
      break;
    }
    std::vector<Point> sub;
    sub.reserve(remaining.size());
    for (int g : remaining) sub.push_back(P[g]);
    Coreset round = build_coreset(poly, sub, eps, threads);

    std::vector<int> picked;
    picked.reserve(round.indices.size());
    for (int i : round.indices) picked.push_back(remaining[i]);

    if (r == 0) {
      out = std::move(round); // round-0 indices are already global
    } else {
      for (CoresetPoint cp : round.log) {
        cp.point = remaining[cp.point];
        cp.round = r;
        out.log.push_back(cp);
      }
      out.indices.insert(out.indices.end(), picked.begin(), picked.end());
    }

    std::vector<char> drop(P.size(), 0);
    for (int g : picked) drop[g] = 1;
    std::erase_if(remaining, [&](int g) { return drop[g]; });
  }

  std::sort(out.indices.begin(), out.indices.end());
  out.indices.erase(std::unique(out.indices.begin(), out.indices.end()), out.indices.end());
  return out;
}

} // namespace geocoreset
