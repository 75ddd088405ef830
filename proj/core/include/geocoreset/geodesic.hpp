#pragma once

#include <optional>
#include <vector>

#include "geocoreset/geom.hpp"

namespace geocoreset {

// A geodesic shortest path inside a simple polygon, in canonical form: no two
// consecutive vertices coincide; every interior vertex is a reflex polygon
// vertex the path bends around (a zero turn means the path grazes the vertex
// exactly). A zero-length path (source == target) has one vertex.
struct GeodesicPath {
  std::vector<Point> vertices;
  double length = 0.0;

  Point source() const { return vertices.front(); }
  Point target() const { return vertices.back(); }
  int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
  bool degenerate() const { return edge_count() < 1; }

  // Directions of the first/last edge; throw DegeneratePath on 0-edge paths.
  double first_dir() const;
  double last_dir() const;

  GeodesicPath reversed() const;
};

// Globally shortest path between a and b (both in the closed polygon),
// computed with the funnel algorithm over the triangulation's dual tree.
GeodesicPath shortest_path(const SimplePolygon& poly, Point a, Point b);

// Single-source shortest paths from a fixed source: parent links and exact
// distances for every polygon vertex, plus one funnel per triangle so that a
// query anywhere in the polygon costs one tangent walk. Immutable after
// construction; the polygon must outlive the tree.
class ShortestPathTree {
public:
  ShortestPathTree(const SimplePolygon& poly, Point source);

  Point source() const { return source_; }

  // Path identical (vertices and length) to shortest_path(source, t).
  GeodesicPath query(Point t) const;
  double distance(Point t) const;
  // Direction of the first path edge at the source; DegeneratePath if t is
  // the source itself. Does not materialize the path.
  double first_direction(Point t) const;

  // Per-polygon-vertex data (vertex ids index the polygon's vertex list).
  double vertex_distance(int vid) const { return dist_[vid]; }
  int vertex_parent(int vid) const { return parent_[vid]; } // -1 = source

  // Unchecked variants skip the containment precondition (callers that have
  // already validated their points; the builder hot path).
  double distance_unchecked(Point t) const;
  double first_direction_unchecked(Point t) const;

private:
  struct ChainVertex {
    Point pt;
    int id; // polygon vertex id, or -1 for the source point
  };
  struct Funnel {
    std::vector<ChainVertex> chain; // left portal end .. apex .. right portal end
    int apex = 0;
  };

  int tangent_index(const Funnel& f, Point w) const;
  GeodesicPath assemble(const Funnel& f, int t_idx, Point q) const;
  const Funnel& funnel_for(Point t) const;

  const SimplePolygon* poly_;
  Point source_;
  std::vector<double> dist_;      // per polygon vertex
  std::vector<int> parent_;       // per polygon vertex; -1 = source
  std::vector<double> first_hop_; // direction of the first path edge at source
  std::vector<Funnel> funnels_;   // per triangle (funnel as entered)
};

inline ShortestPathTree spt_build(const SimplePolygon& poly, Point source) {
  return ShortestPathTree(poly, source);
}
inline GeodesicPath spt_query(const ShortestPathTree& spt, Point t) { return spt.query(t); }

// Extend a path beyond its source (backward) or target (forward), collinear
// with the end edge, until the polygon boundary or length cap — whichever
// comes first. Backward returns {stop, v0}; forward returns {v_end, stop}.
Segment ext_backward(const SimplePolygon& poly, const GeodesicPath& path,
                     std::optional<double> cap = std::nullopt);
Segment ext_forward(const SimplePolygon& poly, const GeodesicPath& path,
                    std::optional<double> cap = std::nullopt);

// The connected arc of directions swept by the path's edges (edge directions
// plus the turning arcs between consecutive edges). Saturates at full circle.
using Span = DirectionArc;
Span span(const GeodesicPath& path);

// Independent distance oracle: Dijkstra over the visibility graph of polygon
// vertices plus the two query points. Vertex-to-vertex visibility is cached
// per instance, so repeated queries on one polygon are cheap.
class VisGraph {
public:
  explicit VisGraph(const SimplePolygon& poly);
  double distance(Point a, Point b) const;

private:
  bool visible(Point a, Point b) const;

  const SimplePolygon* poly_;
  int n_;
  std::vector<std::vector<std::pair<int, double>>> vertex_adj_;
};

double visgraph_distance(const SimplePolygon& poly, Point a, Point b);

// Geodesic pseudo-triangle spanned by three points: split points (where the
// two paths leaving each corner diverge) and the three pairwise internally
// disjoint sides. When two split points coincide the result is flagged
// degenerate rather than raising an error.
struct PseudoTriangle {
  Point p, q, r;                        // split points
  GeodesicPath side_pq, side_qr, side_rp;
  bool degenerate = false;
};

PseudoTriangle pseudo_triangle(const SimplePolygon& poly, Point a, Point b, Point c);

} // namespace geocoreset
