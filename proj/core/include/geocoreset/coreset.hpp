#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "geocoreset/diameter.hpp"
#include "geocoreset/geodesic.hpp"
#include "geocoreset/geom.hpp"

namespace geocoreset {

// k = ceil(4*pi/eps) equally spaced directions phi_j on the circle; cone j
// runs counterclockwise from phi_j to phi_{j+1} (cyclic), so the cones tile
// the circle with width 2*pi/k <= eps/2 each.
struct CanonicalCones {
  int k = 0;
  std::vector<DirectionArc> cones; // cones[j] starts at 2*pi*j/k
};

// eps <= 0 is rejected (BadEpsilon); eps > 1 is clamped to 1, matching the
// range the approximation guarantee is stated for.
CanonicalCones canonical_cones(double eps);

// The arc of first-edge directions dir(x, p) traced as x moves along an
// anchor edge (a piece edge of gamma or a B sub-segment), plus the weight
// used to rank p, which is always the geodesic distance from the owning
// anchor point to p. Wraparound arcs are a single DirectionArc crossing 0.
struct ReachInterval {
  int point = -1;      // index of p into the instance point set
  DirectionArc arc;
  double weight = 0.0; // geodesic distance anchor -> p
};

// Reach interval of p for the given anchor edge. The two endpoint directions
// come from the shortest paths edge.a -> p and edge.b -> p; generically both
// point strictly into the half-plane on p's side of the edge's supporting
// line and the traced arc is the (< pi) arc between them. When that
// selection is ambiguous -- an endpoint direction collinear with the edge,
// a direction on the wrong side, near-antipodal directions, or p collinear
// with the edge line -- the arc is instead the smallest arc covering the
// directions sampled at `samples` interior edge points plus the endpoint
// directions. Over-inclusion is safe for the coreset guarantee;
// under-inclusion is not, hence the conservative fallback.
// Throws DegenerateAnchor when the edge is degenerate or p lies on it.
ReachInterval reach_interval(const SimplePolygon& poly, const Segment& edge, Point anchor,
                             Point p, int samples = 8);

// Best point per canonical cone: the maximum-weight interval intersecting
// the cone (closed, with kAngleTol slack), ties to the smaller point index.
struct ConeBest {
  int point = -1; // -1 = no interval reaches this cone
  double weight = 0.0;
};

// Segment tree over the cones: each interval maps to a contiguous cyclic
// cone range (found arithmetically, then extended while the same closed
// intersection predicate the brute force uses still holds), range-updated
// in O(log k). Agrees exactly with cone_max_brute by construction.
std::vector<ConeBest> cone_max(const CanonicalCones& cones,
                               const std::vector<ReachInterval>& items);

// Reference implementation: per cone, scan every interval.
std::vector<ConeBest> cone_max_brute(const CanonicalCones& cones,
                                     const std::vector<ReachInterval>& items);

// Why a coreset point was selected. R = furthest on a side; X = furthest
// pocket point on a side; Alpha = furthest in one half-polygon of an
// intermediate edge; F / L = furthest reachable from the first / last piece
// edge in one cone on one side; BCone = the same for a B sub-segment.
enum class SelKind { DiameterEndpoint, R, X, Alpha, F, L, BCone };

struct CoresetPoint {
  int point = -1;              // index into the instance point set
  SelKind kind = SelKind::DiameterEndpoint;
  int piece = -1;              // piece index; for BCone the sub-piece ordinal
  int side = 0;                // side 1/2 of the cut; Alpha: half-polygon 1/2
  int cone = -1;               // canonical cone j for F/L/BCone
  int seg = -1;                // B segment index for BCone
  int round = 0;               // outlier iteration that produced the entry

  // Compact provenance label: "diam", "R(i,s)", "X(i,s)", "A(i,h)",
  // "F(i,j,s)", "L(i,j,s)", "B(seg,piece,j,s)"; outlier rounds append "@r".
  std::string tag() const;
};

// The constructed coreset plus everything the construction derived, kept for
// reports and rendering. `indices` is the deduplicated point set, ascending;
// `log` records every individual selection with provenance.
struct Coreset {
  double eps = 0.0; // value actually used (after clamping to <= 1)
  int k = 0;        // canonical cone count
  int ell = 0;      // piece count
  std::vector<int> indices;
  std::vector<CoresetPoint> log;
  std::size_t size_bound = 0; // ell*(4k+6) + 2 + sum_s ceil(6|s|/(eps|G|))*2k

  Diameter diam;
  GammaStar star;
  SideDecomposition sides;
  std::vector<Piece> pieces;
  BoundarySet bset;
};

// The size-bound formula alone: ell*(4k+6) + 2 + sum over B segment lengths
// of ceil(6*len/(eps*gamma_len)) * 2k. Exposed so reports can evaluate it
// without building anything.
std::size_t coreset_size_bound(double eps, double gamma_len,
                               const std::vector<double>& b_segment_lengths);

// Per-piece selections (r, x, alpha, f, l) for one piece, and the cone
// selections for the B sub-segments. Exposed mainly for tests; build_coreset
// runs them over all pieces/segments and merges.
std::vector<CoresetPoint> build_piece_set(const SimplePolygon& poly,
                                          const std::vector<Point>& P, const Coreset& ctx,
                                          int piece_index);
std::vector<CoresetPoint> build_B_set(const SimplePolygon& poly, const std::vector<Point>& P,
                                      const Coreset& ctx);

// Full construction: diameter, extension, side split, pieces, per-piece and
// B selections, deduplicated union (always including both diameter
// endpoints). Deterministic for a fixed input order; `threads` > 1 builds
// pieces concurrently with identical results. Throws TooFewPoints (|P| < 2),
// BadEpsilon (eps <= 0), PointOutside, and propagates DegeneratePath when
// all points coincide (the diameter has no direction to extend).
Coreset build_coreset(const SimplePolygon& poly, const std::vector<Point>& P, double eps,
                      int threads = 1);

// z+1 rounds of build_coreset, each on the points not yet selected; round
// coresets are disjoint and entries record their round. A final round left
// with a single point emits it as a DiameterEndpoint entry so no survivor is
// silently dropped; exhausted rounds stop early. Structural fields (diam,
// star, pieces, ...) describe round 0.
Coreset build_outlier_coreset(const SimplePolygon& poly, const std::vector<Point>& P,
                              double eps, int z, int threads = 1);

} // namespace geocoreset
