#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geocoreset/geom.hpp"

namespace geocoreset {

// A named test instance: the polygon plus the point set living inside it.
struct Instance {
  std::string name;
  SimplePolygon polygon;
  std::vector<Point> points;
  std::uint64_t seed = 0;
};

enum class PolygonKind { Convex, Random2Opt, Comb, Spiral };

const char* kind_name(PolygonKind k);
std::optional<PolygonKind> parse_kind(std::string_view name);

// Deterministic polygon generators, all emitting coordinates inside
// [0,1000]^2:
//   convex     regular m-gon (seed ignored)
//   random2opt m uniform random vertices untangled by repeated 2-opt swaps
//              of crossing edges; retries with fresh points if the untangled
//              ring fails validation
//   comb       axis-aligned comb with (m-2)/4 teeth, tooth depth 10x the
//              spine height; requires m = 4t+2 (GenerationFailed otherwise)
//   spiral     rectangular spiral corridor with ~m vertices (m rounded down
//              to even), the long-boundary worst case for relative hulls
// Throws TooFewVertices (m < 3) and GenerationFailed (bad comb count or
// retry budget exhausted).
SimplePolygon gen_polygon(PolygonKind kind, int m, std::uint64_t seed);

// n uniform samples from the polygon interior (closed): triangle picked by
// area, then a uniform barycentric draw. Deterministic per seed.
std::vector<Point> gen_points(const SimplePolygon& poly, int n, std::uint64_t seed);

} // namespace geocoreset
