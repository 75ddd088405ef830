#include "doctest.h"

#include <cstdio>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "geocoreset/coreset.hpp"
#include "geocoreset/errors.hpp"
#include "geocoreset/instance.hpp"
#include "geocoreset/io.hpp"
#include "geocoreset/query.hpp"

using namespace geocoreset;

namespace {

const std::vector<Point> kCorners{{1, 1}, {9, 1}, {9, 9}, {1, 9}};

Errc thrown_code(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal; // not thrown
}

} // namespace

TEST_CASE("instance JSON round-trips bit for bit") {
  auto poly = gen_polygon(PolygonKind::Random2Opt, 24, 13);
  auto pts = gen_points(poly, 40, 13);
  Instance inst{"r24", poly, pts, 13};

  std::string text = serialize_instance(inst);
  Instance back = parse_instance(text);
  CHECK(back.name == inst.name);
  CHECK(back.seed == inst.seed);
  REQUIRE(back.polygon.size() == inst.polygon.size());
  for (int i = 0; i < inst.polygon.size(); ++i)
    CHECK(back.polygon.vertex(i) == inst.polygon.vertex(i)); // exact equality
  REQUIRE(back.points.size() == inst.points.size());
  for (std::size_t i = 0; i < inst.points.size(); ++i) CHECK(back.points[i] == inst.points[i]);

  // serializing the parsed copy reproduces the bytes
  CHECK(serialize_instance(back) == text);
}

TEST_CASE("instance JSON layout matches the documented schema") {
  Instance inst{"sq", fixtures::square(), {{5, 5}}, 3};
  std::string text = serialize_instance(inst);
  CHECK(text.find("\"name\": \"sq\"") != std::string::npos);
  CHECK(text.find("\"seed\": 3") != std::string::npos);
  CHECK(text.find("\"polygon\"") != std::string::npos);
  CHECK(text.find("\"points\"") != std::string::npos);
  // coordinates as plain number pairs
  CHECK(text.find("[") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("instance parsing rejects bad input with the right codes") {
  CHECK(thrown_code("this is not json") == Errc::IoError);
  CHECK(thrown_code("{\"name\":\"x\"}") == Errc::IoError);
  CHECK(thrown_code("{\"polygon\":[[0,0],[1]],\"points\":[]}") == Errc::IoError);
  CHECK(thrown_code("{\"polygon\":[[0,0],[4,0],[\"a\",4]],\"points\":[]}") == Errc::IoError);
  // bowtie ring: polygon validation error surfaces as itself
  CHECK(thrown_code("{\"polygon\":[[0,0],[2,2],[2,0],[0,2]],\"points\":[]}") ==
        Errc::SelfIntersecting);
  // point outside the polygon violates the instance invariant
  CHECK(thrown_code("{\"polygon\":[[0,0],[10,0],[10,10],[0,10]],\"points\":[[20,20]]}") ==
        Errc::PointOutside);
}

TEST_CASE("coreset JSON round-trips parameters, indices, and provenance") {
  auto poly = fixtures::square();
  auto C = build_coreset(poly, kCorners, 0.5);
  std::string text = serialize_coreset(C, kCorners);

  CoresetFile f = parse_coreset(text);
  CHECK(f.eps == C.eps);
  CHECK(f.k == C.k);
  CHECK(f.ell == C.ell);
  CHECK(f.size_bound == C.size_bound);
  CHECK(f.diam_p1 == C.diam.p1_index);
  CHECK(f.diam_p2 == C.diam.p2_index);
  CHECK(f.diam_length == C.diam.gamma.length);
  CHECK(f.indices == C.indices);
  REQUIRE(f.selection.size() == C.log.size());
  for (std::size_t i = 0; i < C.log.size(); ++i) {
    CHECK(f.selection[i].index == C.log[i].point);
    CHECK(f.selection[i].tag == C.log[i].tag());
    CHECK(f.selection[i].p == kCorners[static_cast<std::size_t>(C.log[i].point)]);
  }
  CHECK(serialize_coreset(C, kCorners) == text);

  SUBCASE("malformed coreset JSON raises IoError") {
    try {
      parse_coreset("{\"indices\":[0]}");
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::IoError);
    }
  }
}

TEST_CASE("verification CSV has fixed columns and deterministic bytes") {
  auto poly = fixtures::square();
  std::vector<Point> queries{{5, 5}, {2, 3}};
  auto rep = verify_instance(poly, kCorners, 1.0, queries);
  auto lem = lemma_checks(poly, kCorners, queries);

  std::string csv = report_csv(rep, &lem);
  REQUIRE(csv.substr(0, csv.find('\n')) == "qx,qy,exact_d,approx_d,ratio,walkback_ok,branch");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3); // header + one row per query
  for (char c : csv) CHECK(c != ' ');
  CHECK(report_csv(rep, &lem) == csv);

  // every row has exactly seven fields
  std::size_t pos = csv.find('\n') + 1;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    std::string row = csv.substr(pos, end - pos);
    CHECK(std::count(row.begin(), row.end(), ',') == 6);
    pos = end + 1;
  }

  SUBCASE("rows without lemma results leave the flag cells empty") {
    std::string bare = report_csv(rep);
    std::size_t line1 = bare.find('\n') + 1;
    std::string row = bare.substr(line1, bare.find('\n', line1) - line1);
    CHECK(row.substr(row.size() - 2) == ",,");
  }
}

TEST_CASE("verification JSON summary") {
  auto poly = fixtures::square();
  auto rep = verify_instance(poly, kCorners, 0.5, {{5, 5}});
  auto lem = lemma_checks(poly, kCorners, {{5, 5}});
  std::string j = report_json(rep, &lem);
  CHECK(j.find("\"eps\"") != std::string::npos);
  CHECK(j.find("\"coreset_size\"") != std::string::npos);
  CHECK(j.find("\"min_ratio\"") != std::string::npos);
  CHECK(j.find("\"violations\": []") != std::string::npos);
  CHECK(j.find("\"lemmas\"") != std::string::npos);
  CHECK(j.find("\"dichotomy_failures\": 0") != std::string::npos);

  auto empty = verify_instance(poly, kCorners, 0.5, {});
  std::string je = report_json(empty);
  CHECK(je.find("\"min_ratio\": null") != std::string::npos);
  CHECK(je.find("\"lemmas\"") == std::string::npos);
}

TEST_CASE("file helpers round-trip and fail loudly") {
  const std::string path = "io_test_scratch.json";
  write_file(path, "{\"a\":1}\n");
  CHECK(read_file(path) == "{\"a\":1}\n");
  std::remove(path.c_str());

  try {
    read_file("definitely/not/a/real/path.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
  try {
    write_file("definitely/not/a/real/dir/x.json", "x");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
}
