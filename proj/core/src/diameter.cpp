#include "geocoreset/diameter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace geocoreset {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Running argmax over pairs; ties resolve to the lexicographically smallest
// (i, j), matching a lexicographic scan that keeps the first strict maximum.
struct PairBest {
  double d = -kInf;
  int i = -1, j = -1;

  bool lex_smaller(int ii, int jj) const { return ii < i || (ii == i && jj < j); }
  void consider(double dd, int ii, int jj) {
    if (ii > jj) std::swap(ii, jj);
    if (dd > d || (dd == d && lex_smaller(ii, jj))) {
      d = dd;
      i = ii;
      j = jj;
    }
  }
};

bool polygon_convex(const SimplePolygon& poly) {
  for (int i = 0; i < poly.size(); ++i)
    if (poly.is_reflex(i)) return false;
  return true;
}

// Convex hull indices (Andrew's monotone chain), keeping collinear points so
// that exact distance ties on hull edges are still represented.
std::vector<int> hull_indices(const std::vector<Point>& pts) {
  int n = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
    if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
    return a < b;
  });
  auto build = [&](auto begin, auto end) {
    std::vector<int> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2 && orient(pts[h[h.size() - 2]], pts[h.back()], pts[*it]) < 0)
        h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  std::vector<int> lower = build(idx.begin(), idx.end());
  std::vector<int> upper = build(idx.rbegin(), idx.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.empty()) lower.push_back(idx[0]); // all points coincide
  return lower;
}

} // namespace

Diameter compute_diameter(const SimplePolygon& poly, const std::vector<Point>& P) {
  int n = static_cast<int>(P.size());
  if (n < 2) throw Error(Errc::TooFewPoints, "diameter needs at least 2 points");

  bool convex = polygon_convex(poly);
  PairBest best;

  if (convex && n > 512) {
    // Geodesic distance equals Euclidean distance in a convex polygon, and
    // every maximizing pair lies on the (collinear-inclusive) hull of P.
    std::vector<int> h = hull_indices(P);
    for (size_t a = 0; a < h.size(); ++a)
      for (size_t b = a + 1; b < h.size(); ++b)
        if (h[a] != h[b]) best.consider(dist(P[h[a]], P[h[b]]), h[a], h[b]);
  } else if (n <= 512 || convex) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double d = convex ? dist(P[i], P[j]) : shortest_path(poly, P[i], P[j]).length;
        best.consider(d, i, j);
      }
  } else {
    // Exact anchor-bound pruning: distances to a few anchor sources give the
    // triangle-inequality upper bound min_k (d_k(i) + d_k(j)) >= d(i, j).
    // Pairs strictly below the running best are skipped; every survivor is
    // evaluated exactly, so the result matches plain all-pairs.
    const int kAnchors = std::min(16, n);
    std::vector<std::vector<double>> D;
    std::vector<int> anchors;
    std::vector<double> cover(n, kInf);
    int next = 0;
    for (int k = 0; k < kAnchors; ++k) {
      anchors.push_back(next);
      ShortestPathTree spt(poly, P[next]);
      std::vector<double> row(n);
      for (int j = 0; j < n; ++j) row[j] = spt.distance_unchecked(P[j]);
      for (int j = 0; j < n; ++j) cover[j] = std::min(cover[j], row[j]);
      D.push_back(std::move(row));
      next = static_cast<int>(std::max_element(cover.begin(), cover.end()) - cover.begin());
    }
    for (int k = 0; k < kAnchors; ++k)
      for (int j = 0; j < n; ++j)
        if (anchors[k] != j) best.consider(D[k][j], anchors[k], j);

    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double ub = kInf;
        for (int k = 0; k < kAnchors; ++k) ub = std::min(ub, D[k][i] + D[k][j]);
        if (ub < best.d || (ub == best.d && !best.lex_smaller(i, j))) continue;
        best.consider(shortest_path(poly, P[i], P[j]).length, i, j);
      }
    }
  }

  Diameter out;
  out.p1_index = best.i;
  out.p2_index = best.j;
  out.gamma = shortest_path(poly, P[best.i], P[best.j]);
  out.length = out.gamma.length;
  return out;
}

GammaStar extend_gamma(const SimplePolygon& poly, const GeodesicPath& gamma) {
  if (gamma.degenerate())
    throw Error(Errc::DegeneratePath, "cannot extend a zero-length diameter path");
  Point v0 = gamma.vertices.front(), v1 = gamma.vertices[1];
  Point vk = gamma.vertices.back(), vj = gamma.vertices[gamma.vertices.size() - 2];
  RayHit h1 = poly.ray_shoot(v0, v0 - v1);
  RayHit h2 = poly.ray_shoot(vk, vk - vj);

  GammaStar out;
  out.s1 = h1.t <= kDistTol ? Segment{v0, v0} : Segment{h1.point, v0};
  out.s2 = h2.t <= kDistTol ? Segment{vk, vk} : Segment{vk, h2.point};
  out.chain.clear();
  auto push = [&](Point p) {
    if (out.chain.empty() || !(out.chain.back() == p)) out.chain.push_back(p);
  };
  push(out.s1.a);
  for (const Point& p : gamma.vertices) push(p);
  push(out.s2.b);
  return out;
}

std::vector<Piece> split_pieces(const GeodesicPath& gamma, double eps) {
  if (!(eps > 0.0)) throw Error(Errc::BadEpsilon, "eps must be positive");
  if (eps > 1.0) eps = 1.0;
  if (gamma.degenerate() || gamma.length <= kDistTol)
    throw Error(Errc::DegeneratePath, "cannot split a degenerate diameter path");

  int ell = static_cast<int>(std::ceil(6.0 / eps));
  double L = 0.0;
  std::vector<double> t(gamma.vertices.size(), 0.0);
  for (size_t i = 1; i < gamma.vertices.size(); ++i) {
    L += dist(gamma.vertices[i - 1], gamma.vertices[i]);
    t[i] = L;
  }
  double snap = 1e-12 * L;

  std::vector<double> cuts(ell + 1);
  for (int i = 0; i <= ell; ++i) {
    double s = L * double(i) / double(ell);
    for (double tv : t)
      if (std::abs(tv - s) <= snap) s = tv; // land exactly on a path vertex
    cuts[i] = s;
  }
  cuts[0] = 0.0;
  cuts[ell] = L;

  auto point_at = [&](double s) -> Point {
    size_t k = std::upper_bound(t.begin(), t.end(), s) - t.begin();
    if (k == 0) return gamma.vertices.front();
    if (k >= t.size()) return gamma.vertices.back();
    --k;
    if (s == t[k]) return gamma.vertices[k];
    double u = (s - t[k]) / (t[k + 1] - t[k]);
    return Segment{gamma.vertices[k], gamma.vertices[k + 1]}.at(u);
  };

  std::vector<Piece> pieces(ell);
  for (int i = 0; i < ell; ++i) {
    Piece& pc = pieces[i];
    pc.index = i;
    pc.lo = cuts[i];
    pc.hi = cuts[i + 1];
    pc.chain.push_back(point_at(pc.lo));
    for (size_t k = 0; k < t.size(); ++k)
      if (t[k] > pc.lo + snap && t[k] < pc.hi - snap) pc.chain.push_back(gamma.vertices[k]);
    pc.chain.push_back(point_at(pc.hi));
  }
  return pieces;
}

// --- side decomposition ------------------------------------------------------

namespace {

int match_vertex(const std::vector<Point>& verts, Point p) {
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (near(p, verts[i])) return i;
  return -1;
}

} // namespace

bool SideDecomposition::on_cut(Point p, double tol) const {
  for (size_t i = 0; i + 1 < cut_chain.size(); ++i)
    if (point_segment_dist(p, {cut_chain[i], cut_chain[i + 1]}) <= tol) return true;
  return false;
}

int SideDecomposition::component_of(Point p) const {
  for (size_t c = 0; c < components.size(); ++c)
    if (ring_contains(components[c].ring, p) != Containment::Exterior)
      return static_cast<int>(c);
  return -1;
}

int SideDecomposition::side_of(Point p) const {
  if (on_cut(p)) return 1;
  int c = component_of(p);
  return c >= 0 ? components[c].side : 1;
}

SideDecomposition side_split(const SimplePolygon& poly, const GammaStar& gs) {
  SideDecomposition out;
  out.cut_chain = gs.chain;
  out.cut_param.assign(gs.chain.size(), 0.0);
  for (size_t i = 1; i < gs.chain.size(); ++i)
    out.cut_param[i] = out.cut_param[i - 1] + dist(gs.chain[i - 1], gs.chain[i]);
  out.s1_len = gs.s1.length();
  out.gamma_len = out.cut_len() - out.s1_len - gs.s2.length();

  const auto& verts = poly.vertices();
  int m = poly.size();
  std::vector<Point> node_pt = verts;
  auto new_node = [&](Point p) {
    node_pt.push_back(p);
    return static_cast<int>(node_pt.size()) - 1;
  };

  int g = static_cast<int>(gs.chain.size());
  std::vector<int> ck(g);
  for (int j = 0; j < g; ++j) {
    int v = match_vertex(verts, gs.chain[j]);
    ck[j] = v >= 0 ? v : new_node(gs.chain[j]);
  }
  std::map<int, double> key_param;
  for (int j = 0; j < g; ++j) key_param[ck[j]] = out.cut_param[j];

  // Boundary ring with the cut endpoints inserted into their edges (cut
  // interior vertices are reflex polygon vertices and matched above).
  struct Ins {
    double t;
    int key;
  };
  std::vector<std::vector<Ins>> per_edge(m);
  for (int j : {0, g - 1}) {
    if (ck[j] < m) continue; // coincides with a polygon vertex
    int be = -1;
    double bd = kInf;
    for (int e = 0; e < m; ++e) {
      double d = point_segment_dist(gs.chain[j], poly.edge(e));
      if (d < bd) {
        bd = d;
        be = e;
      }
    }
    if (bd > kDistTol)
      throw Error(Errc::Internal, "cut endpoint does not lie on the polygon boundary");
    per_edge[be].push_back({closest_param(gs.chain[j], poly.edge(be)), ck[j]});
  }
  std::vector<int> ring;
  for (int i = 0; i < m; ++i) {
    ring.push_back(i);
    std::sort(per_edge[i].begin(), per_edge[i].end(),
              [](const Ins& a, const Ins& b) { return a.t < b.t; });
    for (const Ins& ins : per_edge[i]) ring.push_back(ins.key);
  }
  int R = static_cast<int>(ring.size());

  auto ring_pos = [&](int key) {
    for (int i = 0; i < R; ++i)
      if (ring[i] == key) return i;
    return -1;
  };
  int pos_front = ring_pos(ck[0]);
  int pos_back = ring_pos(ck[g - 1]);
  if (pos_front < 0 || pos_back < 0)
    throw Error(Errc::Internal, "cut endpoint missing from the boundary ring");

  auto emit = [&](const std::vector<int>& keys, int side) {
    if (keys.size() < 3) return;
    std::vector<Point> pts;
    pts.reserve(keys.size());
    for (int k : keys) pts.push_back(node_pt[k]);
    double a2 = 0.0, perim = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
      size_t j = (i + 1) % pts.size();
      a2 += cross(pts[i], pts[j]);
      perim += dist(pts[i], pts[j]);
    }
    if (std::abs(a2) <= 2.0 * kDistTol * std::max(perim, 1.0)) return; // sliver
    if (a2 < 0.0) std::reverse(pts.begin(), pts.end());
    double lo = kInf, hi = -kInf;
    for (int k : keys) {
      auto it = key_param.find(k);
      if (it != key_param.end()) {
        lo = std::min(lo, it->second);
        hi = std::max(hi, it->second);
      }
    }
    if (lo > hi) { // never touches the cut: can never be a pocket
      lo = 0.0;
      hi = out.cut_len();
    }
    out.components.push_back({side, std::move(pts), lo, hi});
  };

  auto split_cycles = [&](const std::vector<int>& cyc, int side) {
    std::vector<int> stack;
    std::map<int, int> at;
    for (int key : cyc) {
      auto it = at.find(key);
      if (it == at.end()) {
        at[key] = static_cast<int>(stack.size());
        stack.push_back(key);
      } else {
        std::vector<int> sub(stack.begin() + it->second, stack.end());
        for (size_t q = it->second + 1; q < stack.size(); ++q) at.erase(stack[q]);
        stack.resize(it->second + 1);
        emit(sub, side);
      }
    }
    emit(stack, side);
  };

  if (ck[0] == ck[g - 1]) {
    // Both cut endpoints coincide on the boundary: the cut is a closed loop;
    // treat the whole polygon as a single side-1 region.
    emit(ring, 1);
    return out;
  }

  std::vector<int> cyc1, cyc2;
  for (int i = pos_front;; i = (i + 1) % R) {
    cyc1.push_back(ring[i]);
    if (i == pos_back) break;
  }
  for (int j = g - 2; j >= 1; --j) cyc1.push_back(ck[j]);

  for (int j = 0; j < g; ++j) cyc2.push_back(ck[j]);
  for (int i = (pos_back + 1) % R; i != pos_front; i = (i + 1) % R) cyc2.push_back(ring[i]);

  split_cycles(cyc1, 1);
  split_cycles(cyc2, 2);
  return out;
}

PieceClassification pocket_and_edge_classify(const SideDecomposition& decomp,
                                             const GeodesicPath& gamma, const Piece& piece) {
  PieceClassification out;
  double slack = 1e-9 * (1.0 + decomp.cut_len());
  double plo = decomp.s1_len + piece.lo;
  double phi = decomp.s1_len + piece.hi;
  for (size_t c = 0; c < decomp.components.size(); ++c) {
    const SideComponent& sc = decomp.components[c];
    if (sc.gs_lo >= plo - slack && sc.gs_hi <= phi + slack)
      out.pockets.push_back(static_cast<int>(c));
  }

  // Cumulative parameters of the piece chain (gamma arc length).
  int ne = static_cast<int>(piece.chain.size()) - 1;
  std::vector<double> ep(piece.chain.size(), piece.lo);
  for (int i = 1; i <= ne; ++i) ep[i] = ep[i - 1] + dist(piece.chain[i - 1], piece.chain[i]);

  std::vector<double> gt(gamma.vertices.size(), 0.0);
  for (size_t i = 1; i < gamma.vertices.size(); ++i)
    gt[i] = gt[i - 1] + dist(gamma.vertices[i - 1], gamma.vertices[i]);

  out.classes.assign(ne, EdgeClass::Plain);
  for (int j = 0; j < ne; ++j) {
    double a = decomp.s1_len + ep[j], b = decomp.s1_len + ep[j + 1];
    int covered = 0; // bit 1: side-1 pocket, bit 2: side-2 pocket
    for (int c : out.pockets) {
      const SideComponent& sc = decomp.components[c];
      if (a >= sc.gs_lo - slack && b <= sc.gs_hi + slack) covered |= sc.side;
    }
    if (covered & 1) out.classes[j] = EdgeClass::PocketIn1;
    else if (covered & 2) out.classes[j] = EdgeClass::PocketIn2;
    else if (j == 0) out.classes[j] = EdgeClass::First;
    else if (j == ne - 1) out.classes[j] = EdgeClass::Last;
    else {
      out.classes[j] = EdgeClass::Intermediate;
      // Supporting gamma edge (the chain edge lies inside exactly one).
      double mid = 0.5 * (ep[j] + ep[j + 1]);
      size_t k = std::upper_bound(gt.begin(), gt.end(), mid) - gt.begin();
      if (k > 0 && k < gt.size())
        out.intermediate_edges.push_back({gamma.vertices[k - 1], gamma.vertices[k]});
    }
  }
  return out;
}

// --- sigma and B -------------------------------------------------------------

Point Sigma::to_frame(Point p) const {
  double c = std::cos(-angle), s = std::sin(-angle);
  Point d = p - center;
  return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

Point Sigma::from_frame(Point p) const {
  double c = std::cos(angle), s = std::sin(angle);
  Point d = p - center;
  return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

BoundarySet build_B(const SimplePolygon& poly, const GeodesicPath& gamma, const GammaStar& gs) {
  BoundarySet out;
  Point p1 = gamma.vertices.front(), p2 = gamma.vertices.back();
  out.sigma.center = 0.5 * (p1 + p2);
  out.sigma.angle = std::atan2(p2.y - p1.y, p2.x - p1.x);
  out.sigma.half = gamma.length;
  double H = out.sigma.half;
  if (H <= kDistTol) return out;

  Point c = out.sigma.center;
  double x0 = c.x - H, x1 = c.x + H, y0 = c.y - H, y1 = c.y + H;

  std::vector<Point> exits; // in frame coordinates
  auto add_extension = [&](Point inner_w, Point outer_w) {
    if (dist(inner_w, outer_w) <= kDistTol) return;
    Point a = out.sigma.to_frame(inner_w);
    Point b = out.sigma.to_frame(outer_w);
    // Clip a->b to the square; a is strictly inside (|a-c| <= H/2 < H).
    double t_exit = 1.0;
    Point d = b - a;
    if (d.x > 0) t_exit = std::min(t_exit, (x1 - a.x) / d.x);
    if (d.x < 0) t_exit = std::min(t_exit, (x0 - a.x) / d.x);
    if (d.y > 0) t_exit = std::min(t_exit, (y1 - a.y) / d.y);
    if (d.y < 0) t_exit = std::min(t_exit, (y0 - a.y) / d.y);
    if (t_exit >= 1.0 - 1e-12) {
      out.segments.push_back({inner_w, outer_w}); // fully inside sigma
    } else {
      Point xf = a + t_exit * d;
      out.segments.push_back({inner_w, out.sigma.from_frame(xf)});
      exits.push_back(xf);
    }
  };
  add_extension(gs.s1.b, gs.s1.a); // p1 outward to p1'
  add_extension(gs.s2.a, gs.s2.b); // p2 outward to p2'

  if (exits.empty()) return out;

  // Walk the square perimeter (frame coords, parameter in [0, 8H)) and split
  // it into gaps at corners and at crossings with the polygon boundary.
  std::array<Point, 4> corner{Point{x0, y0}, Point{x1, y0}, Point{x1, y1}, Point{x0, y1}};
  auto param_point = [&](double s) -> Point {
    s = std::fmod(s, 8.0 * H);
    if (s < 0) s += 8.0 * H;
    int k = std::min(3, static_cast<int>(s / (2.0 * H)));
    double local = s - 2.0 * H * k;
    Point ca = corner[k], cb = corner[(k + 1) % 4];
    double t = local / (2.0 * H);
    return {ca.x + t * (cb.x - ca.x), ca.y + t * (cb.y - ca.y)};
  };

  std::vector<double> ev{0.0, 2.0 * H, 4.0 * H, 6.0 * H};
  for (int k = 0; k < 4; ++k) {
    Point ca = corner[k], cb = corner[(k + 1) % 4];
    Point d = cb - ca;
    double side_len = 2.0 * H;
    for (int e = 0; e < poly.size(); ++e) {
      Point pa = out.sigma.to_frame(poly.vertex(e));
      Point pb = out.sigma.to_frame(poly.vertex(e + 1));
      Point s = pb - pa;
      double slen = norm(s);
      double rxs = cross(d, s);
      Point qp = pa - ca;
      double ttol = kDistTol / side_len;
      if (std::abs(rxs) <= 1e-12 * side_len * slen) {
        if (std::abs(cross(qp, d)) <= kDistTol * side_len) {
          for (Point pt : {pa, pb}) {
            double t = dot(pt - ca, d) / (side_len * side_len);
            if (t >= -ttol && t <= 1.0 + ttol)
              ev.push_back(2.0 * H * k + std::clamp(t, 0.0, 1.0) * side_len);
          }
        }
        continue;
      }
      double t = cross(qp, s) / rxs;
      double u = cross(qp, d) / rxs;
      double etol = kDistTol / std::max(slen, kDistTol);
      if (u >= -etol && u <= 1.0 + etol && t >= -ttol && t <= 1.0 + ttol)
        ev.push_back(2.0 * H * k + std::clamp(t, 0.0, 1.0) * side_len);
    }
  }
  std::sort(ev.begin(), ev.end());
  ev.erase(std::unique(ev.begin(), ev.end(),
                       [](double a, double b) { return b - a <= kDistTol; }),
           ev.end());
  if (!ev.empty() && ev.front() <= kDistTol && 8.0 * H - ev.back() <= kDistTol && ev.size() > 1)
    ev.pop_back(); // wrap-duplicate of 0

  int ng = static_cast<int>(ev.size());
  std::vector<bool> inside(ng);
  for (int i = 0; i < ng; ++i) {
    double a = ev[i], b = (i + 1 < ng) ? ev[i + 1] : ev[0] + 8.0 * H;
    Point midf = param_point(0.5 * (a + b));
    inside[i] = poly.contains(out.sigma.from_frame(midf)) != Containment::Exterior;
  }

  std::vector<bool> emitted(ng, false);
  auto gap_of = [&](double s) {
    int lo = static_cast<int>(std::upper_bound(ev.begin(), ev.end(), s) - ev.begin()) - 1;
    return (lo % ng + ng) % ng;
  };
  for (const Point& xf : exits) {
    double best_s = 0.0, best_d = kInf;
    // Parameter of the exit point on the perimeter.
    for (int k = 0; k < 4; ++k) {
      Segment side{corner[k], corner[(k + 1) % 4]};
      double t = closest_param(xf, side);
      double dd = dist(xf, side.at(t));
      if (dd < best_d) {
        best_d = dd;
        best_s = 2.0 * H * k + t * 2.0 * H;
      }
    }
    int g0 = gap_of(best_s);
    if (!inside[g0]) {
      int gm = (g0 - 1 + ng) % ng; // exit sits on an event: try the gap before
      if (!inside[gm]) continue;   // numerically outside; nothing to add
      g0 = gm;
    }
    int lo = g0, hi = g0;
    for (int step = 0; step < ng; ++step) {
      int nxt = (lo - 1 + ng) % ng;
      if (nxt == hi || !inside[nxt]) break;
      lo = nxt;
    }
    for (int step = 0; step < ng; ++step) {
      int nxt = (hi + 1) % ng;
      if (nxt == lo || !inside[nxt]) break;
      hi = nxt;
    }
    for (int i = lo;; i = (i + 1) % ng) {
      if (inside[i] && !emitted[i]) {
        emitted[i] = true;
        double a = ev[i], b = (i + 1 < ng) ? ev[i + 1] : ev[0] + 8.0 * H;
        if (b - a > kDistTol) {
          out.segments.push_back({out.sigma.from_frame(param_point(a)),
                                  out.sigma.from_frame(param_point(b))});
        }
      }
      if (i == hi) break;
    }
  }
  return out;
}

} // namespace geocoreset
