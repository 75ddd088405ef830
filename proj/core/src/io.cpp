#include "geocoreset/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "geocoreset/errors.hpp"

namespace geocoreset {

namespace {

using nlohmann::ordered_json;

ordered_json points_json(const std::vector<Point>& pts) {
  ordered_json arr = ordered_json::array();
  for (Point p : pts) arr.push_back(ordered_json::array({p.x, p.y}));
  return arr;
}

std::vector<Point> points_from(const ordered_json& arr, const char* what) {
  if (!arr.is_array())
    throw Error(Errc::IoError, std::string(what) + " must be an array of [x,y] pairs");
  std::vector<Point> out;
  out.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw Error(Errc::IoError, std::string(what) + " entries must be [x,y] numbers");
    out.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return out;
}

ordered_json parse_json(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::IoError, std::string(what) + " JSON parse failed: " + e.what());
  }
}

} // namespace

std::string serialize_instance(const Instance& inst) {
  ordered_json j;
  j["name"] = inst.name;
  j["seed"] = inst.seed;
  j["polygon"] = points_json(inst.polygon.vertices());
  j["points"] = points_json(inst.points);
  return j.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  ordered_json j = parse_json(text, "instance");
  if (!j.is_object() || !j.contains("polygon") || !j.contains("points"))
    throw Error(Errc::IoError, "instance JSON needs polygon and points fields");
  SimplePolygon poly = SimplePolygon::validate(points_from(j["polygon"], "polygon"));
  std::vector<Point> pts = points_from(j["points"], "points");
  for (Point p : pts)
    if (poly.contains(p) == Containment::Exterior)
      throw Error(Errc::PointOutside, "instance point lies outside its polygon");
  return Instance{j.value("name", std::string("instance")), std::move(poly), std::move(pts),
                  j.value("seed", std::uint64_t{0})};
}

std::string serialize_coreset(const Coreset& c, const std::vector<Point>& P) {
  ordered_json j;
  j["eps"] = c.eps;
  j["k"] = c.k;
  j["ell"] = c.ell;
  j["size_bound"] = c.size_bound;
  j["diameter"] = ordered_json{
      {"p1", c.diam.p1_index}, {"p2", c.diam.p2_index}, {"length", c.diam.gamma.length}};
  ordered_json sel = ordered_json::array();
  for (const CoresetPoint& e : c.log) {
    ordered_json o;
    o["index"] = e.point;
    o["x"] = P[static_cast<std::size_t>(e.point)].x;
    o["y"] = P[static_cast<std::size_t>(e.point)].y;
    o["tag"] = e.tag();
    sel.push_back(std::move(o));
  }
  j["selection"] = std::move(sel);
  j["indices"] = c.indices;
  return j.dump(2) + "\n";
}

CoresetFile parse_coreset(const std::string& text) {
  ordered_json j = parse_json(text, "coreset");
  if (!j.is_object() || !j.contains("indices") || !j.contains("selection"))
    throw Error(Errc::IoError, "coreset JSON needs indices and selection fields");
  CoresetFile f;
  try {
    f.eps = j.value("eps", 0.0);
    f.k = j.value("k", 0);
    f.ell = j.value("ell", 0);
    f.size_bound = j.value("size_bound", std::size_t{0});
    if (j.contains("diameter")) {
      const auto& d = j["diameter"];
      f.diam_p1 = d.value("p1", -1);
      f.diam_p2 = d.value("p2", -1);
      f.diam_length = d.value("length", 0.0);
    }
    for (const auto& o : j["selection"]) {
      CoresetFile::Entry e;
      e.index = o.at("index").get<int>();
      e.p = {o.at("x").get<double>(), o.at("y").get<double>()};
      e.tag = o.at("tag").get<std::string>();
      f.selection.push_back(std::move(e));
    }
    f.indices = j["indices"].get<std::vector<int>>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::IoError, std::string("coreset JSON schema mismatch: ") + e.what());
  }
  return f;
}

std::string report_csv(const VerificationReport& rep, const LemmaTallies* lemmas) {
  std::string out = "qx,qy,exact_d,approx_d,ratio,walkback_ok,branch\n";
  char buf[256];
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    const QueryRecord& r = rep.records[i];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g", r.q.x, r.q.y, r.exact_d,
                  r.approx_d, r.ratio);
    out += buf;
    if (lemmas && i < lemmas->records.size()) {
      std::snprintf(buf, sizeof buf, ",%d,%d", lemmas->records[i].walkback_ok ? 1 : 0,
                    lemmas->records[i].branch);
      out += buf;
    } else {
      out += ",,";
    }
    out += "\n";
  }
  return out;
}

std::string report_json(const VerificationReport& rep, const LemmaTallies* lemmas) {
  ordered_json j;
  j["eps"] = rep.eps;
  j["coreset_size"] = rep.coreset_size;
  j["size_bound"] = rep.size_bound;
  j["queries"] = rep.records.size();
  j["min_ratio"] = rep.min_ratio ? ordered_json(*rep.min_ratio) : ordered_json(nullptr);
  j["violations"] = rep.violations;
  if (lemmas) {
    j["lemmas"] = ordered_json{{"walkback_samples", lemmas->walkback_samples},
                               {"walkback_failures", lemmas->walkback_failures},
                               {"dichotomy_queries", lemmas->dichotomy_queries},
                               {"path_hits", lemmas->path_hits},
                               {"extension_hits", lemmas->extension_hits},
                               {"dichotomy_failures", lemmas->dichotomy_failures}};
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, "read failed: " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out.good()) throw Error(Errc::IoError, "write failed: " + path);
}

} // namespace geocoreset
