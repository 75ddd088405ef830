// Command-line front end: instance generation, coreset builds, queries,
// verification runs, size sweeps, and SVG rendering. All file outputs are
// deterministic for a fixed seed and configuration; wall-clock timings go to
// stderr only.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "geocoreset/coreset.hpp"
#include "geocoreset/errors.hpp"
#include "geocoreset/instance.hpp"
#include "geocoreset/io.hpp"
#include "geocoreset/query.hpp"
#include "geocoreset/svg.hpp"

using namespace geocoreset;

namespace {

// Seed precedence: explicit flag, then GEOCORESET_SEED, then the default.
std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value) {
  if (opt != nullptr && opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("GEOCORESET_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw Error(Errc::IoError, std::string("GEOCORESET_SEED is not a number: ") + env);
    }
  }
  return flag_value;
}

void warn_eps(double eps) {
  if (eps > 1.0) std::fprintf(stderr, "warning: eps %g exceeds 1 and is clamped to 1\n", eps);
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::fputs(text.c_str(), stdout);
  else
    write_file(out, text);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodesic furthest-neighbor coresets in simple polygons"};
  app.set_version_flag("--version", "geocoreset 1.0.0");
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- gen ------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance (polygon + points)");
  std::string gen_kind = "random2opt", gen_name, gen_out;
  int gen_m = 30, gen_n = 50;
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", gen_kind, "polygon family")
      ->check(CLI::IsMember({"convex", "random2opt", "comb", "spiral"}));
  gen->add_option("--m", gen_m, "polygon vertex count")->check(CLI::Range(3, 1000000));
  gen->add_option("--n", gen_n, "point count")->check(CLI::Range(2, 100000000));
  auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--name", gen_name, "instance name (default derived)");
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");
  gen->callback([&] {
    std::uint64_t seed = resolve_seed(gen_seed_opt, gen_seed);
    SimplePolygon poly = gen_polygon(*parse_kind(gen_kind), gen_m, seed);
    std::vector<Point> pts = gen_points(poly, gen_n, seed + 1); // distinct stream
    std::string name = gen_name.empty()
                           ? gen_kind + "-m" + std::to_string(gen_m) + "-n" + std::to_string(gen_n) +
                                 "-s" + std::to_string(seed)
                           : gen_name;
    emit(gen_out, serialize_instance(Instance{name, std::move(poly), std::move(pts), seed}));
  });

  // ---- build ----------------------------------------------------------
  auto* build = app.add_subcommand("build", "build a coreset for an instance");
  std::string build_in, build_out;
  double build_eps = 0.0;
  int build_threads = 1;
  build->add_option("instance", build_in, "instance JSON path")->required();
  build->add_option("--eps", build_eps, "approximation parameter in (0,1]")
      ->required()
      ->check(CLI::PositiveNumber);
  build->add_option("--parallel", build_threads, "worker threads")->check(CLI::Range(1, 512));
  build->add_option("-o,--out", build_out, "output path (default stdout)");
  build->callback([&] {
    Instance inst = load_instance(build_in);
    warn_eps(build_eps);
    auto t0 = std::chrono::steady_clock::now();
    Coreset C = build_coreset(inst.polygon, inst.points, build_eps, build_threads);
    std::fprintf(stderr, "build: n=%zu m=%d eps=%g -> %zu coreset points in %.1f ms\n",
                 inst.points.size(), inst.polygon.size(), C.eps, C.indices.size(), ms_since(t0));
    emit(build_out, serialize_coreset(C, inst.points));
  });

  // ---- query ----------------------------------------------------------
  auto* query = app.add_subcommand("query", "furthest-neighbor queries on an instance");
  std::string query_in, query_out;
  double query_qx = 0.0, query_qy = 0.0, query_eps = 0.0;
  int query_count = 0, query_threads = 1;
  std::uint64_t query_seed = 0;
  query->add_option("instance", query_in, "instance JSON path")->required();
  auto* qx_opt = query->add_option("--qx", query_qx, "query point x");
  auto* qy_opt = query->add_option("--qy", query_qy, "query point y");
  query->add_option("--queries", query_count, "number of sampled query points")
      ->check(CLI::Range(1, 10000000));
  auto* query_seed_opt = query->add_option("--seed", query_seed, "sampling seed");
  auto* query_eps_opt =
      query->add_option("--eps", query_eps, "also answer from a coreset built at this eps")
          ->check(CLI::PositiveNumber);
  query->add_option("--parallel", query_threads, "worker threads")->check(CLI::Range(1, 512));
  query->add_option("-o,--out", query_out, "output path (default stdout)");
  qx_opt->needs(qy_opt);
  qy_opt->needs(qx_opt);
  query->callback([&] {
    Instance inst = load_instance(query_in);
    std::vector<Point> qs;
    if (qx_opt->count() > 0) {
      qs.push_back({query_qx, query_qy});
    } else if (query_count > 0) {
      qs = gen_points(inst.polygon, query_count, resolve_seed(query_seed_opt, query_seed));
    } else {
      throw Error(Errc::IoError, "query needs either --qx/--qy or --queries");
    }
    nlohmann::ordered_json j;
    j["instance"] = inst.name;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (query_eps_opt->count() > 0) {
      warn_eps(query_eps);
      VerificationReport rep =
          verify_instance(inst.polygon, inst.points, query_eps, qs, query_threads);
      j["eps"] = rep.eps;
      for (const QueryRecord& r : rep.records) {
        rows.push_back(nlohmann::ordered_json{{"q", {r.q.x, r.q.y}},
                                              {"exact_point", r.exact_point},
                                              {"exact_d", r.exact_d},
                                              {"approx_point", r.approx_point},
                                              {"approx_d", r.approx_d},
                                              {"ratio", r.ratio}});
      }
      j["min_ratio"] = rep.min_ratio ? nlohmann::ordered_json(*rep.min_ratio)
                                     : nlohmann::ordered_json(nullptr);
    } else {
      for (Point q : qs) {
        QueryResult r = exact_fn(inst.polygon, inst.points, q);
        rows.push_back(nlohmann::ordered_json{
            {"q", {q.x, q.y}}, {"exact_point", r.point}, {"exact_d", r.distance}});
      }
    }
    j["queries"] = std::move(rows);
    emit(query_out, j.dump(2) + "\n");
  });

  // ---- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check the guarantee on sampled queries");
  std::string verify_in, verify_out, verify_csv;
  double verify_eps = 0.0;
  int verify_count = 200, verify_threads = 1;
  std::uint64_t verify_seed = 0;
  verify->add_option("instance", verify_in, "instance JSON path")->required();
  verify->add_option("--eps", verify_eps, "approximation parameter in (0,1]")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--queries", verify_count, "number of sampled queries")
      ->check(CLI::Range(1, 10000000));
  auto* verify_seed_opt = verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--parallel", verify_threads, "worker threads")->check(CLI::Range(1, 512));
  verify->add_option("--csv", verify_csv, "per-query CSV output path");
  verify->add_option("-o,--out", verify_out, "JSON summary path (default stdout)");
  verify->callback([&] {
    Instance inst = load_instance(verify_in);
    warn_eps(verify_eps);
    std::uint64_t seed = resolve_seed(verify_seed_opt, verify_seed);
    std::vector<Point> qs = gen_points(inst.polygon, verify_count, seed);
    VerificationReport rep =
        verify_instance(inst.polygon, inst.points, verify_eps, qs, verify_threads);
    LemmaTallies lem = lemma_checks(inst.polygon, inst.points, qs);
    if (!verify_csv.empty()) write_file(verify_csv, report_csv(rep, &lem));
    emit(verify_out, report_json(rep, &lem));
    if (!rep.violations.empty() || lem.walkback_failures > 0 || lem.dichotomy_failures > 0) {
      std::fprintf(stderr, "verify: %zu guarantee violations, %d walk-back failures, "
                           "%d dichotomy failures\n",
                   rep.violations.size(), lem.walkback_failures, lem.dichotomy_failures);
      exit_code = 2;
    }
  });

  // ---- bench ----------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "sweep eps and point counts; CSV of sizes");
  std::string bench_kind = "random2opt", bench_out;
  int bench_m = 40, bench_threads = 1;
  std::vector<int> bench_sizes{50, 100, 200};
  std::vector<double> bench_eps{0.4, 0.2, 0.1, 0.05};
  std::uint64_t bench_seed = 0;
  bench->add_option("--kind", bench_kind, "polygon family")
      ->check(CLI::IsMember({"convex", "random2opt", "comb", "spiral"}));
  bench->add_option("--m", bench_m, "polygon vertex count")->check(CLI::Range(3, 1000000));
  bench->add_option("--sizes", bench_sizes, "point counts, comma-separated")->delimiter(',');
  bench->add_option("--eps", bench_eps, "eps values, comma-separated")->delimiter(',');
  auto* bench_seed_opt = bench->add_option("--seed", bench_seed, "RNG seed");
  bench->add_option("--parallel", bench_threads, "worker threads")->check(CLI::Range(1, 512));
  bench->add_option("-o,--out", bench_out, "CSV output path (default stdout)");
  bench->callback([&] {
    std::uint64_t seed = resolve_seed(bench_seed_opt, bench_seed);
    SimplePolygon poly = gen_polygon(*parse_kind(bench_kind), bench_m, seed);
    std::string csv = "kind,m,n,eps,k,ell,coreset_size,size_bound\n";
    char buf[256];
    for (int n : bench_sizes) {
      std::vector<Point> pts = gen_points(poly, n, seed + 1 + static_cast<std::uint64_t>(n));
      for (double eps : bench_eps) {
        warn_eps(eps);
        auto t0 = std::chrono::steady_clock::now();
        Coreset C = build_coreset(poly, pts, eps, bench_threads);
        std::fprintf(stderr, "bench: n=%d eps=%g -> %zu points in %.1f ms\n", n, C.eps,
                     C.indices.size(), ms_since(t0));
        std::snprintf(buf, sizeof buf, "%s,%d,%d,%.17g,%d,%d,%zu,%zu\n", bench_kind.c_str(),
                      bench_m, n, C.eps, C.k, C.ell, C.indices.size(), C.size_bound);
        csv += buf;
      }
    }
    emit(bench_out, csv);
  });

  // ---- render ---------------------------------------------------------
  auto* render = app.add_subcommand("render", "draw an instance (and coreset) as SVG");
  std::string render_in, render_coreset, render_out;
  double render_eps = 0.25, render_qx = 0.0, render_qy = 0.0;
  std::uint64_t render_seed = 0;
  render->add_option("instance", render_in, "instance JSON path")->required();
  render->add_option("coreset", render_coreset, "coreset JSON path (optional)");
  auto* render_eps_opt =
      render->add_option("--eps", render_eps, "eps for a fresh coreset build (when no coreset file)")
          ->check(CLI::PositiveNumber);
  auto* rqx = render->add_option("--qx", render_qx, "sample query x");
  auto* rqy = render->add_option("--qy", render_qy, "sample query y");
  auto* render_seed_opt =
      render->add_option("--seed", render_seed, "sample one query point with this seed");
  render->add_option("-o,--out", render_out, "SVG output path (default stdout)");
  rqx->needs(rqy);
  rqy->needs(rqx);
  render->callback([&] {
    Instance inst = load_instance(render_in);
    double eps = render_eps;
    bool have_file = !render_coreset.empty();
    CoresetFile f;
    if (have_file) {
      f = parse_coreset(read_file(render_coreset));
      if (f.eps > 0) eps = f.eps;
      if (render_eps_opt->count() > 0 && render_eps != f.eps)
        std::fprintf(stderr, "warning: --eps %g ignored in favor of the coreset file's %g\n",
                     render_eps, f.eps);
    }
    warn_eps(eps);
    Coreset C = build_coreset(inst.polygon, inst.points, eps);
    if (have_file && f.indices != C.indices)
      std::fprintf(stderr, "warning: coreset file does not match a rebuild of this instance\n");

    SvgQuery sq;
    bool with_query = false;
    if (rqx->count() > 0) {
      sq.q = {render_qx, render_qy};
      with_query = true;
    } else if (render_seed_opt->count() > 0 || std::getenv("GEOCORESET_SEED") != nullptr) {
      sq.q = gen_points(inst.polygon, 1, resolve_seed(render_seed_opt, render_seed)).front();
      with_query = true;
    }
    if (with_query) {
      sq.exact = exact_fn(inst.polygon, inst.points, sq.q).path;
      sq.approx = approx_fn(inst.polygon, inst.points, C, sq.q).path;
    }
    emit(render_out, render_svg(inst.polygon, inst.points, &C, with_query ? &sq : nullptr));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return exit_code;
}
