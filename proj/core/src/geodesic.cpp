#include "geocoreset/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <deque>
#include <queue>
#include <stack>

namespace geocoreset {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Canonical vertex list: no consecutive duplicates. Reflex vertices the path
// merely grazes (zero turn) stay in the list; they are genuine contact points.
std::vector<Point> canonical_vertices(const std::vector<Point>& in) {
  std::vector<Point> out;
  out.reserve(in.size());
  for (const Point& p : in)
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  return out;
}

GeodesicPath make_path(std::vector<Point> verts) {
  GeodesicPath gp;
  gp.vertices = canonical_vertices(verts);
  gp.length = 0.0;
  for (size_t i = 1; i < gp.vertices.size(); ++i)
    gp.length += dist(gp.vertices[i - 1], gp.vertices[i]);
  return gp;
}

// locate() with a deterministic fallback for points that sit numerically just
// outside every closed triangle (boundary points after rounding): pick the
// triangle with the least normalized violation.
int locate_robust(const SimplePolygon& poly, Point p) {
  const Triangulation& tr = poly.triangulation();
  int t = tr.locate(p, poly.vertices());
  if (t >= 0) return t;
  const auto& verts = poly.vertices();
  double best = -kInf;
  int bi = -1;
  for (int i = 0; i < static_cast<int>(tr.triangles.size()); ++i) {
    double m = kInf;
    for (int e = 0; e < 3; ++e) {
      Point a = verts[tr.triangles[i].v[e]];
      Point b = verts[tr.triangles[i].v[(e + 1) % 3]];
      double len = dist(a, b);
      if (len == 0.0) continue;
      m = std::min(m, orient_value(a, b, p) / len);
    }
    if (m > best) {
      best = m;
      bi = i;
    }
  }
  return bi;
}

// Funnel string pull over a portal sequence; portals[0] = (a,a), last = (b,b),
// left/right as seen walking a -> b. The funnel keeps the full convex chain on
// each side (not just one tangent point per side) so that reflex vertices the
// taut path merely grazes -- exactly collinear contacts -- survive into the
// output: collinear chain links are kept, and an apex advance along a chain
// emits every vertex it passes, grazed or turned.
std::vector<Point> string_pull(const std::vector<std::pair<Point, Point>>& portals) {
  std::vector<Point> path;
  std::deque<Point> fun; // left chain (outermost first), apex, right chain
  size_t ap = 0;         // apex position inside fun
  fun.push_back(portals[0].first);
  path.push_back(portals[0].first);

  auto add_right = [&](Point w) {
    if (fun.back() == w) return;
    // Drop right-chain vertices strictly inside the tangent from w. A chain
    // end exactly collinear with w stays only when w continues past it (a
    // graze); when w falls at or behind it -- e.g. the target coincides with
    // the apex after the sleeve wound around a vertex -- it pops too.
    while (fun.size() - 1 > ap) {
      Point pv = fun[fun.size() - 2], bk = fun.back();
      int o = orient(pv, bk, w);
      if (!(o > 0 || (o == 0 && dot(w - bk, bk - pv) <= 0))) break;
      fun.pop_back();
    }
    if (fun.size() - 1 == ap) {
      // The tangent may wrap the apex and climb the left chain. A collinear
      // continuation past the next vertex is a graze and advances too.
      while (ap > 0) {
        Point nx = fun[ap - 1];
        int o = orient(fun[ap], nx, w);
        if (!(o > 0 || (o == 0 && dot(w - nx, nx - fun[ap]) > 0))) break;
        path.push_back(nx);
        fun.pop_back(); // old apex; the right chain is empty here
        --ap;
      }
    }
    fun.push_back(w);
  };

  auto add_left = [&](Point w) {
    if (fun.front() == w) return;
    while (ap > 0) {
      Point pv = fun[1], fr = fun.front();
      int o = orient(pv, fr, w);
      if (!(o < 0 || (o == 0 && dot(w - fr, fr - pv) <= 0))) break;
      fun.pop_front();
      --ap;
    }
    if (ap == 0) {
      while (fun.size() > 1) {
        Point nx = fun[1];
        int o = orient(fun[0], nx, w);
        if (!(o < 0 || (o == 0 && dot(w - nx, nx - fun[0]) > 0))) break;
        path.push_back(nx);
        fun.pop_front(); // old apex; the left chain is empty here
      }
    }
    fun.push_front(w);
    ++ap;
  };

  for (size_t i = 1; i + 1 < portals.size(); ++i) {
    if (!(portals[i].first == portals[i - 1].first)) add_left(portals[i].first);
    if (!(portals[i].second == portals[i - 1].second)) add_right(portals[i].second);
  }
  add_right(portals.back().first);
  for (size_t k = ap + 1; k < fun.size(); ++k) path.push_back(fun[k]);
  return path;
}

} // namespace

double GeodesicPath::first_dir() const {
  if (degenerate()) throw Error(Errc::DegeneratePath, "zero-length path has no first edge");
  return direction_angle(vertices[0], vertices[1]);
}

double GeodesicPath::last_dir() const {
  if (degenerate()) throw Error(Errc::DegeneratePath, "zero-length path has no last edge");
  return direction_angle(vertices[vertices.size() - 2], vertices.back());
}

GeodesicPath GeodesicPath::reversed() const {
  GeodesicPath out = *this;
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

GeodesicPath shortest_path(const SimplePolygon& poly, Point a, Point b) {
  if (poly.contains(a) == Containment::Exterior)
    throw Error(Errc::PointOutside, "path source outside polygon");
  if (poly.contains(b) == Containment::Exterior)
    throw Error(Errc::PointOutside, "path target outside polygon");
  if (a == b) return GeodesicPath{{a}, 0.0};

  const Triangulation& tr = poly.triangulation();
  int ta = locate_robust(poly, a);
  int tb = locate_robust(poly, b);
  if (ta == tb) return make_path({a, b});

  // Path of triangles through the dual tree.
  std::vector<int> par(tr.triangles.size(), -2);
  std::queue<int> bfs;
  bfs.push(ta);
  par[ta] = -1;
  while (!bfs.empty() && par[tb] == -2) {
    int t = bfs.front();
    bfs.pop();
    for (int nb : tr.adj[t]) {
      if (nb >= 0 && par[nb] == -2) {
        par[nb] = t;
        bfs.push(nb);
      }
    }
  }
  if (par[tb] == -2) throw Error(Errc::Internal, "triangulation dual is disconnected");
  std::vector<int> seq;
  for (int t = tb; t != -1; t = par[t]) seq.push_back(t);
  std::reverse(seq.begin(), seq.end());

  const auto& verts = poly.vertices();
  std::vector<std::pair<Point, Point>> portals;
  portals.reserve(seq.size() + 1);
  portals.emplace_back(a, a);
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    int t = seq[i], nb = seq[i + 1];
    int e = 0;
    while (tr.adj[t][e] != nb) ++e;
    // Crossing out of t through its ccw-directed edge (u,v): v is on the left.
    Point u = verts[tr.triangles[t].v[e]];
    Point v = verts[tr.triangles[t].v[(e + 1) % 3]];
    portals.emplace_back(v, u);
  }
  portals.emplace_back(b, b);

  return make_path(string_pull(portals));
}

// --- shortest-path tree ------------------------------------------------------

ShortestPathTree::ShortestPathTree(const SimplePolygon& poly, Point source)
    : poly_(&poly), source_(source) {
  if (poly.contains(source) == Containment::Exterior)
    throw Error(Errc::PointOutside, "tree source outside polygon");

  const Triangulation& tr = poly.triangulation();
  const auto& verts = poly.vertices();
  int m = poly.size();
  dist_.assign(m, kInf);
  parent_.assign(m, -2);
  first_hop_.assign(m, 0.0);
  funnels_.assign(tr.triangles.size(), {});

  int t0 = locate_robust(poly, source);
  funnels_[t0].chain = {{source, -1}};
  funnels_[t0].apex = 0;

  auto chain_dist = [&](const ChainVertex& c) { return c.id < 0 ? 0.0 : dist_[c.id]; };
  auto attach = [&](int vid, const ChainVertex& via) {
    double base = chain_dist(via);
    dist_[vid] = base + dist(via.pt, verts[vid]);
    parent_[vid] = via.id;
    if (via.id < 0 || base == 0.0) {
      first_hop_[vid] =
          near(source_, verts[vid], 0.0) ? 0.0 : direction_angle(source_, verts[vid]);
    } else {
      first_hop_[vid] = first_hop_[via.id];
    }
  };

  for (int e = 0; e < 3; ++e) attach(tr.triangles[t0].v[e], {source, -1});

  struct Entry {
    int to, from;
    Funnel f;
  };
  std::stack<Entry> work;
  for (int e = 0; e < 3; ++e) {
    int nb = tr.adj[t0][e];
    if (nb < 0) continue;
    int u = tr.triangles[t0].v[e];
    int v = tr.triangles[t0].v[(e + 1) % 3];
    Funnel f;
    f.chain = {{verts[v], v}, {source, -1}, {verts[u], u}};
    f.apex = 1;
    work.push({nb, t0, std::move(f)});
  }

  while (!work.empty()) {
    Entry cur = std::move(work.top());
    work.pop();
    int to = cur.to, from = cur.from;
    int es = 0;
    while (tr.adj[to][es] != from) ++es;
    int w = tr.triangles[to].v[(es + 2) % 3]; // far vertex, new to the tree

    const Funnel& f = cur.f;
    int t = tangent_index(f, verts[w]);
    if (parent_[w] != -2) throw Error(Errc::Internal, "vertex attached twice in tree build");
    attach(w, f.chain[t]);

    // Neighbor across (w, left-portal endpoint): the left sub-funnel.
    int nb_left = tr.adj[to][(es + 2) % 3];
    if (nb_left >= 0) {
      Funnel lf;
      lf.chain.assign(f.chain.begin(), f.chain.begin() + t + 1);
      lf.chain.push_back({verts[w], w});
      lf.apex = std::min(f.apex, t);
      work.push({nb_left, to, std::move(lf)});
    }
    // Neighbor across (right-portal endpoint, w): the right sub-funnel.
    int nb_right = tr.adj[to][(es + 1) % 3];
    if (nb_right >= 0) {
      Funnel rf;
      rf.chain.push_back({verts[w], w});
      rf.chain.insert(rf.chain.end(), f.chain.begin() + t, f.chain.end());
      rf.apex = 1 + std::max(f.apex, t) - t;
      work.push({nb_right, to, std::move(rf)});
    }
    funnels_[to] = std::move(cur.f);
  }
}

int ShortestPathTree::tangent_index(const Funnel& f, Point w) const {
  const auto& c = f.chain;
  int k = static_cast<int>(c.size()) - 1;
  int t = f.apex;
  if (c[t].pt == w) return t;
  // Equality-inclusive so a grazed chain vertex (zero turn) becomes the
  // attachment point, matching the vertex lists the funnel pull produces.
  while (t < k && (c[t + 1].pt == w || orient(c[t].pt, c[t + 1].pt, w) <= 0)) {
    ++t;
    if (c[t].pt == w) return t;
  }
  if (t != f.apex) return t;
  while (t > 0 && (c[t - 1].pt == w || orient(c[t].pt, c[t - 1].pt, w) >= 0)) {
    --t;
    if (c[t].pt == w) return t;
  }
  return t;
}

const ShortestPathTree::Funnel& ShortestPathTree::funnel_for(Point t) const {
  return funnels_[locate_robust(*poly_, t)];
}

GeodesicPath ShortestPathTree::assemble(const Funnel& f, int t_idx, Point q) const {
  const ChainVertex& c = f.chain[t_idx];
  std::vector<Point> pts;
  if (c.id < 0) {
    pts = {source_, q};
  } else {
    std::vector<int> ids;
    for (int v = c.id; v >= 0; v = parent_[v]) ids.push_back(v);
    pts.push_back(source_);
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) pts.push_back(poly_->vertices()[*it]);
    pts.push_back(q);
  }
  return make_path(std::move(pts));
}

GeodesicPath ShortestPathTree::query(Point t) const {
  if (poly_->contains(t) == Containment::Exterior)
    throw Error(Errc::PointOutside, "tree query outside polygon");
  if (t == source_) return GeodesicPath{{t}, 0.0};
  const Funnel& f = funnel_for(t);
  return assemble(f, tangent_index(f, t), t);
}

double ShortestPathTree::distance_unchecked(Point t) const {
  const Funnel& f = funnel_for(t);
  const ChainVertex& c = f.chain[tangent_index(f, t)];
  return (c.id < 0 ? 0.0 : dist_[c.id]) + dist(c.pt, t);
}

double ShortestPathTree::distance(Point t) const {
  if (poly_->contains(t) == Containment::Exterior)
    throw Error(Errc::PointOutside, "tree query outside polygon");
  return distance_unchecked(t);
}

double ShortestPathTree::first_direction_unchecked(Point t) const {
  const Funnel& f = funnel_for(t);
  const ChainVertex& c = f.chain[tangent_index(f, t)];
  if (c.id < 0 || dist_[c.id] == 0.0) {
    if (near(source_, t, 0.0))
      throw Error(Errc::DegeneratePath, "first direction undefined at the source");
    return direction_angle(source_, t);
  }
  return first_hop_[c.id];
}

double ShortestPathTree::first_direction(Point t) const {
  if (poly_->contains(t) == Containment::Exterior)
    throw Error(Errc::PointOutside, "tree query outside polygon");
  return first_direction_unchecked(t);
}

// --- extensions and spans -----------------------------------------------

Segment ext_backward(const SimplePolygon& poly, const GeodesicPath& path,
                     std::optional<double> cap) {
  if (path.degenerate()) throw Error(Errc::DegeneratePath, "cannot extend a zero-length path");
  Point v0 = path.vertices[0], v1 = path.vertices[1];
  RayHit h = poly.ray_shoot(v0, v0 - v1, cap);
  return {h.point, v0};
}

Segment ext_forward(const SimplePolygon& poly, const GeodesicPath& path,
                    std::optional<double> cap) {
  if (path.degenerate()) throw Error(Errc::DegeneratePath, "cannot extend a zero-length path");
  Point vk = path.vertices.back(), vj = path.vertices[path.vertices.size() - 2];
  RayHit h = poly.ray_shoot(vk, vk - vj, cap);
  return {vk, h.point};
}

Span span(const GeodesicPath& path) {
  if (path.degenerate()) throw Error(Errc::DegeneratePath, "zero-length path has no span");
  double prev = std::atan2(path.vertices[1].y - path.vertices[0].y,
                           path.vertices[1].x - path.vertices[0].x);
  double unrolled = prev, lo = prev, hi = prev;
  for (size_t i = 2; i < path.vertices.size(); ++i) {
    double raw = std::atan2(path.vertices[i].y - path.vertices[i - 1].y,
                            path.vertices[i].x - path.vertices[i - 1].x);
    unrolled += std::remainder(raw - prev, 2.0 * std::numbers::pi);
    prev = raw;
    lo = std::min(lo, unrolled);
    hi = std::max(hi, unrolled);
  }
  double width = std::min(hi - lo, 2.0 * std::numbers::pi);
  return DirectionArc::from_start_width(norm_angle(lo), width);
}

// --- visibility-graph oracle ----------------------------------------------

VisGraph::VisGraph(const SimplePolygon& poly) : poly_(&poly), n_(poly.size()) {
  vertex_adj_.assign(n_, {});
  const auto& v = poly.vertices();
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (visible(v[i], v[j])) {
        double w = dist(v[i], v[j]);
        vertex_adj_[i].emplace_back(j, w);
        vertex_adj_[j].emplace_back(i, w);
      }
    }
  }
}

bool VisGraph::visible(Point a, Point b) const {
  if (a == b) return true;
  Point d = b - a;
  double len = norm(d);
  if (len <= kDistTol) return true;
  double utol = kDistTol / len;

  std::vector<double> ts{0.0, 1.0};
  int m = poly_->size();
  for (int i = 0; i < m; ++i) {
    Point p = poly_->vertex(i), q = poly_->vertex(i + 1);
    int o1 = orient(a, b, p), o2 = orient(a, b, q);
    int o3 = orient(p, q, a), o4 = orient(p, q, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return false; // proper crossing
    Point s = q - p;
    double slen = norm(s);
    double rxs = cross(d, s);
    Point qp = p - a;
    if (std::abs(rxs) <= 1e-12 * len * slen) {
      if (std::abs(cross(qp, d)) <= kDistTol * len) { // collinear overlap
        double t1 = dot(qp, d) / (len * len);
        double t2 = dot(q - a, d) / (len * len);
        for (double t : {t1, t2})
          if (t >= -utol && t <= 1.0 + utol) ts.push_back(std::clamp(t, 0.0, 1.0));
      }
      continue;
    }
    double t = cross(qp, s) / rxs;
    double u = cross(qp, d) / rxs;
    double etol = kDistTol / std::max(slen, kDistTol);
    if (u >= -etol && u <= 1.0 + etol && t >= -utol && t <= 1.0 + utol)
      ts.push_back(std::clamp(t, 0.0, 1.0));
  }
  std::sort(ts.begin(), ts.end());
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] <= utol) continue;
    Point mid = a + (0.5 * (ts[i] + ts[i + 1])) * d;
    if (poly_->contains(mid) == Containment::Exterior) return false;
  }
  return true;
}

double VisGraph::distance(Point a, Point b) const {
  if (poly_->contains(a) == Containment::Exterior)
    throw Error(Errc::PointOutside, "oracle source outside polygon");
  if (poly_->contains(b) == Containment::Exterior)
    throw Error(Errc::PointOutside, "oracle target outside polygon");
  if (a == b) return 0.0;
  if (visible(a, b)) return dist(a, b);

  const auto& v = poly_->vertices();
  std::vector<double> da(n_, kInf);
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                      std::greater<>> pq;
  for (int i = 0; i < n_; ++i) {
    if (visible(a, v[i])) {
      da[i] = dist(a, v[i]);
      pq.emplace(da[i], i);
    }
  }
  std::vector<bool> vis_b(n_);
  for (int i = 0; i < n_; ++i) vis_b[i] = visible(b, v[i]);

  double best = kInf;
  std::vector<bool> done(n_, false);
  while (!pq.empty()) {
    auto [d0, i] = pq.top();
    pq.pop();
    if (done[i]) continue;
    done[i] = true;
    if (d0 >= best) break;
    if (vis_b[i]) best = std::min(best, d0 + dist(v[i], b));
    for (auto [j, w] : vertex_adj_[i]) {
      if (!done[j] && d0 + w < da[j]) {
        da[j] = d0 + w;
        pq.emplace(da[j], j);
      }
    }
  }
  if (best == kInf) throw Error(Errc::Internal, "visibility graph is disconnected");
  return best;
}

double visgraph_distance(const SimplePolygon& poly, Point a, Point b) {
  return VisGraph(poly).distance(a, b);
}

// --- pseudo-triangles ------------------------------------------------------

namespace {

size_t common_prefix(const std::vector<Point>& u, const std::vector<Point>& v) {
  size_t i = 0;
  while (i < u.size() && i < v.size() && u[i] == v[i]) ++i;
  return i;
}

GeodesicPath slice_path(const std::vector<Point>& v, size_t lo, size_t hi) {
  return make_path(std::vector<Point>(v.begin() + lo, v.begin() + hi + 1));
}

} // namespace

PseudoTriangle pseudo_triangle(const SimplePolygon& poly, Point a, Point b, Point c) {
  PseudoTriangle out;
  if (a == b || b == c || c == a) {
    out.degenerate = true;
    out.p = a;
    out.q = b;
    out.r = c;
    return out;
  }
  GeodesicPath pab = shortest_path(poly, a, b);
  GeodesicPath pbc = shortest_path(poly, b, c);
  GeodesicPath pca = shortest_path(poly, c, a);
  std::vector<Point> ab = pab.vertices;
  std::vector<Point> ba(ab.rbegin(), ab.rend());
  std::vector<Point> bc = pbc.vertices;
  std::vector<Point> cb(bc.rbegin(), bc.rend());
  std::vector<Point> ca = pca.vertices;
  std::vector<Point> ac(ca.rbegin(), ca.rend());

  // Split point at each corner: where the two paths leaving it diverge.
  size_t lp = common_prefix(ab, ac);
  size_t lq = common_prefix(ba, bc);
  size_t lr = common_prefix(cb, ca);
  out.p = ab[lp - 1];
  out.q = bc[lq - 1];
  out.r = ca[lr - 1];

  size_t nab = ab.size(), nbc = bc.size(), nca = ca.size();
  bool ok = (lp - 1 <= nab - lq) && (lq - 1 <= nbc - lr) && (lr - 1 <= nca - lp);
  if (ok) {
    out.side_pq = slice_path(ab, lp - 1, nab - lq);
    out.side_qr = slice_path(bc, lq - 1, nbc - lr);
    out.side_rp = slice_path(ca, lr - 1, nca - lp);
  } else {
    out.degenerate = true;
    out.side_pq = GeodesicPath{{out.p}, 0.0};
    out.side_qr = GeodesicPath{{out.q}, 0.0};
    out.side_rp = GeodesicPath{{out.r}, 0.0};
    return out;
  }

  double scale = std::max({dist(out.p, out.q), dist(out.q, out.r), dist(out.r, out.p)});
  bool tiny = near(out.p, out.q) || near(out.q, out.r) || near(out.r, out.p);
  // Flat triangles (split points nearly collinear) are degenerate too.
  bool flat = scale <= kDistTol ||
              std::abs(orient_value(out.p, out.q, out.r)) <= kDistTol * scale;
  out.degenerate = tiny || flat;
  return out;
}

} // namespace geocoreset
