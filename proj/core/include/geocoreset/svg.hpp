#pragma once

#include <string>
#include <vector>

#include "geocoreset/coreset.hpp"
#include "geocoreset/geodesic.hpp"
#include "geocoreset/geom.hpp"

namespace geocoreset {

// One sample query for the drawing: the query point and the two realizing
// paths (both starting at q).
struct SvgQuery {
  Point q;
  GeodesicPath exact;
  GeodesicPath approx;
};

// Standalone SVG document. Every layer group is always present, in z-order,
// with a stable id — polygon, pockets, pieces, bset, gamma, points, coreset,
// query — and groups whose data was not supplied stay empty. Coreset points
// are colored by provenance kind; each carries its provenance tag as a title.
std::string render_svg(const SimplePolygon& poly, const std::vector<Point>& P,
                       const Coreset* coreset = nullptr, const SvgQuery* query = nullptr);

} // namespace geocoreset
