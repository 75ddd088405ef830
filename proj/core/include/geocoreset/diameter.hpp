#pragma once

#include <optional>
#include <vector>

#include "geocoreset/geodesic.hpp"
#include "geocoreset/geom.hpp"

namespace geocoreset {

// Geodesically furthest pair of P and the path between them.
struct Diameter {
  int p1_index = -1;
  int p2_index = -1; // p1_index < p2_index
  GeodesicPath gamma;
  double length = 0.0;
};

// Gamma extended from both ends, collinear with its end edges, to the
// polygon boundary. Either extension segment may be degenerate (length 0).
struct GammaStar {
  Segment s1; // boundary point p1' -> p1
  Segment s2; // p2 -> boundary point p2'
  std::vector<Point> chain; // p1', gamma vertices, p2' (consecutive dups removed)

  Point p1_prime() const { return s1.a; }
  Point p2_prime() const { return s2.b; }
};

// One of the equal-length sub-paths of gamma.
enum class EdgeClass { First, Last, PocketIn1, PocketIn2, Intermediate, Plain };

struct Piece {
  int index = 0;
  double lo = 0.0, hi = 0.0;  // arc-length interval along gamma
  std::vector<Point> chain;   // piece start .. gamma vertices inside .. piece end

  Point start() const { return chain.front(); }       // anchor gamma_i
  Point end() const { return chain.back(); }          // gamma_{i+1}
  Point first_other() const { return chain[1]; }      // f_i: far end of the first edge
  Point last_other() const { return chain[chain.size() - 2]; } // l_i
  double length() const { return hi - lo; }
};

// A maximal connected sub-region of one side of the polygon cut along the
// extended diameter: bounded by a contiguous sub-chain of the cut and a
// contiguous sub-chain of the polygon boundary.
struct SideComponent {
  int side = 1;              // 1 = right of the cut (walking p1' -> p2'), 2 = left
  std::vector<Point> ring;   // counterclockwise simple boundary
  double gs_lo = 0.0, gs_hi = 0.0; // cut-portion interval (arc length along the cut)
};

class SideDecomposition {
public:
  std::vector<SideComponent> components;
  std::vector<Point> cut_chain;   // the full cut (= GammaStar chain)
  std::vector<double> cut_param;  // cumulative arc length per cut vertex
  double s1_len = 0.0;            // offset of gamma within the cut
  double gamma_len = 0.0;

  double cut_len() const { return cut_param.empty() ? 0.0 : cut_param.back(); }
  bool on_cut(Point p, double tol = kDistTol) const;
  // First component whose closed region contains p (-1 if none, which only
  // happens for points exactly on the cut in degenerate layouts).
  int component_of(Point p) const;
  // Total classifier: points on the cut (and unlocatable points) go to side 1.
  int side_of(Point p) const;
};

// Edge classes for one piece plus the components that are its pockets.
struct PieceClassification {
  std::vector<EdgeClass> classes; // one per piece chain edge
  std::vector<int> pockets;       // component indices whose cut-portion lies in the piece
  // Intermediate edges, as the full supporting gamma edge (both endpoints are
  // reflex polygon vertices; at most one per piece in valid inputs).
  std::vector<Segment> intermediate_edges;
};

// The square sigma: axis-aligned in the frame rotated so the diameter chord
// p1p2 is horizontal, centered at the chord midpoint, side 2*|gamma|.
struct Sigma {
  Point center;
  double angle = 0.0; // rotation of the chord in world coordinates
  double half = 0.0;  // half side length = |gamma|

  Point to_frame(Point p) const;
  Point from_frame(Point p) const;
};

struct BoundarySet {
  Sigma sigma;
  std::vector<Segment> segments; // each of length <= 2*|gamma|, in world coords
};

// Operations ------------------------------------------------------------

// Exact furthest pair under geodesic distance; ties resolve to the
// lexicographically smallest (i, j). Exact regardless of the internal
// strategy (all-pairs, hull fast path for convex inputs, or anchor-bound
// pruning that only ever skips pairs strictly below the running best).
Diameter compute_diameter(const SimplePolygon& poly, const std::vector<Point>& P);

GammaStar extend_gamma(const SimplePolygon& poly, const GeodesicPath& gamma);

// ceil(6/eps) equal-length pieces; boundaries may fall inside gamma edges.
std::vector<Piece> split_pieces(const GeodesicPath& gamma, double eps);

SideDecomposition side_split(const SimplePolygon& poly, const GammaStar& gs);

PieceClassification pocket_and_edge_classify(const SideDecomposition& decomp,
                                             const GeodesicPath& gamma, const Piece& piece);

BoundarySet build_B(const SimplePolygon& poly, const GeodesicPath& gamma, const GammaStar& gs);

} // namespace geocoreset
