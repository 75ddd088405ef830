#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "geocoreset/coreset.hpp"
#include "geocoreset/instance.hpp"
#include "geocoreset/query.hpp"

namespace geocoreset {

// Instance JSON: {"name":str, "seed":int, "polygon":[[x,y],...],
// "points":[[x,y],...]}, polygon counterclockwise. Numbers print in
// shortest-round-trip form, so parse(serialize(x)) reproduces x bit for bit
// and equal inputs serialize to identical bytes.
std::string serialize_instance(const Instance& inst);

// Throws IoError on malformed text or schema; polygon validation errors and
// PointOutside (a point not inside the polygon) propagate as themselves.
Instance parse_instance(const std::string& text);

// Coreset report JSON: build parameters, the diameter pair, the selection log
// (point index, coordinates, provenance tag) and the deduplicated index list.
// P must be the point set the coreset was built from.
std::string serialize_coreset(const Coreset& c, const std::vector<Point>& P);

// The file image of a serialized coreset (the in-memory Coreset also carries
// the decomposition, which is rebuilt from the instance when needed).
struct CoresetFile {
  double eps = 0.0;
  int k = 0;
  int ell = 0;
  std::size_t size_bound = 0;
  int diam_p1 = -1, diam_p2 = -1;
  double diam_length = 0.0;
  struct Entry {
    int index = -1;
    Point p;
    std::string tag;
  };
  std::vector<Entry> selection; // provenance log order
  std::vector<int> indices;     // ascending, deduplicated
};

CoresetFile parse_coreset(const std::string& text);

// Verification outputs. CSV columns are fixed (see docs/formats.md):
// qx,qy,exact_d,approx_d,ratio,walkback_ok,branch — the last two empty when
// no lemma results are supplied. lemmas, when given, must be from the same
// query list in the same order.
std::string report_csv(const VerificationReport& rep, const LemmaTallies* lemmas = nullptr);
std::string report_json(const VerificationReport& rep, const LemmaTallies* lemmas = nullptr);

// Whole-file helpers; both throw IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace geocoreset
