// ccov: compute, check, trace, and benchmark minimum-area disjoint convex
// covers. Subcommands: run | verify | trace | bench | gen.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "convexcover/convexify.hpp"
#include "convexcover/instance.hpp"
#include "convexcover/oracle.hpp"
#include "convexcover/svg.hpp"

using namespace convexcover;

namespace {

constexpr int kExitBadInput = 2;  // I/O, syntax, or instance validation

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

EngineKind engine_of(const std::string& name) {
  return name == "naive" ? EngineKind::naive : EngineKind::grid;
}

Point ipt(long x, long y) { return Point{Rational(Int(x)), Rational(Int(y))}; }

// Every boundary edge of every ring, as bare segments.
std::vector<Segment> boundary_segments(const std::vector<Ring>& rings) {
  std::vector<Segment> out;
  for (const Ring& r : rings)
    for (std::size_t i = 0; i < r.size(); ++i)
      out.push_back(Segment{r[i], r[(i + 1) % r.size()]});
  return out;
}

// Inputs as the validator sees them: polygons verbatim, segments as
// two-point rings.
std::vector<Ring> validation_inputs(const InstanceFile& inst, bool as_segments) {
  if (inst.kind == InstanceKind::polygons && !as_segments) return inst.polygons;
  const std::vector<Segment> segs = inst.kind == InstanceKind::segments
                                        ? inst.segments
                                        : boundary_segments(inst.polygons);
  std::vector<Ring> rings;
  for (const Segment& s : segs) rings.push_back(Ring{s.a, s.b});
  return rings;
}

void print_stats(const std::string& engine, const RunStats& s, const Cover& cover) {
  std::cerr << "engine " << engine << "  elements " << cover.elements.size() << "  area "
            << cover.total_area().str() << "  merges " << s.merges << "  rays "
            << s.rays << "  deleted " << s.deleted_vertices << "  folds "
            << s.cleanup_folds << "\n";
}

// Interleaved L-pieces whose hulls overlap in a chain; adds merge-heavy load
// to benchmarks next to the merge-free jittered-grid stars.
std::vector<Ring> staircase(int k, long ox, long oy = 0) {
  std::vector<Ring> out;
  for (int i = 0; i < k; ++i) {
    const long dx = ox + 2 * i, dy = oy + 2 * i;
    out.push_back(Ring{ipt(dx, dy), ipt(dx + 4, dy), ipt(dx + 4, dy + 1),
                       ipt(dx + 1, dy + 1), ipt(dx + 1, dy + 4), ipt(dx, dy + 4)});
  }
  return out;
}

struct BenchRow {
  long n_vertices;
  double wall_ms;
  RunStats stats;
};

BenchRow bench_one(long n_vertices, unsigned seed, EngineKind kind) {
  // Half the vertex budget in disjoint 20-gon stars, half in bounded
  // interlocking cascades scattered on their own grid east of the stars.
  const int stars = std::max<long>(1, n_vertices / 40);
  const long g = static_cast<long>(std::ceil(std::sqrt(double(stars))));
  const long bbox = 34 * g;
  InstanceFile inst = gen_instance(stars, 20, bbox, seed);
  constexpr int kChain = 24;  // pieces per cascade; spacing 64 > its extent
  const long chunks = std::max<long>(1, n_vertices / (12 * kChain));
  const long cg = static_cast<long>(std::ceil(std::sqrt(double(chunks))));
  for (long c = 0; c < chunks; ++c)
    for (Ring& r : staircase(kChain, bbox + 8 + (c % cg) * 64, (c / cg) * 64))
      inst.polygons.push_back(std::move(r));

  BenchRow row{};
  for (const Ring& r : inst.polygons) row.n_vertices += static_cast<long>(r.size());
  const auto t0 = std::chrono::steady_clock::now();
  convexify(inst.polygons, kind, &row.stats);
  const auto t1 = std::chrono::steady_clock::now();
  row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-area disjoint convex covers"};
  app.require_subcommand(1);

  std::string engine = "grid";
  app.add_option("--engine", engine, "ray engine (naive|grid)")
      ->envname("CONVEXCOVER_ENGINE")
      ->check(CLI::IsMember({"naive", "grid"}));

  auto* cmd_run = app.add_subcommand("run", "compute the cover of an instance");
  std::string run_in, run_out = "-";
  bool run_segments = false;
  cmd_run->add_option("instance", run_in, "instance JSON path (- for stdin)")->required();
  cmd_run->add_option("-o,--output", run_out, "cover JSON path (- for stdout)");
  cmd_run->add_flag("--segments", run_segments,
                    "treat polygon boundaries as bare segments (cover indices "
                    "then refer to segments)");

  auto* cmd_verify = app.add_subcommand("verify", "validate a cover against its instance");
  std::string ver_in, ver_cover;
  bool ver_segments = false;
  unsigned ver_seed = 0;
  cmd_verify->add_option("instance", ver_in, "instance JSON path")->required();
  cmd_verify->add_option("cover", ver_cover, "cover JSON path")->required();
  cmd_verify->add_flag("--segments", ver_segments,
                       "the cover was computed with run --segments");
  cmd_verify->add_option("--seed", ver_seed, "tightness sampling seed");

  auto* cmd_trace = app.add_subcommand("trace", "render the execution as SVG frames");
  std::string trc_in, trc_dir;
  cmd_trace->add_option("instance", trc_in, "polygons instance JSON path")->required();
  cmd_trace->add_option("-d,--dir", trc_dir, "output directory for frames")->required();

  auto* cmd_bench = app.add_subcommand("bench", "time generated instances");
  std::vector<long> bench_sizes;
  unsigned bench_seed = 1;
  cmd_bench->add_option("--sizes", bench_sizes, "total-vertex targets")
      ->required()
      ->delimiter(',');
  cmd_bench->add_option("--seed", bench_seed, "generator seed");

  auto* cmd_gen = app.add_subcommand("gen", "generate a random disjoint instance");
  int gen_n = 4, gen_v = 8;
  long gen_bbox = 1000;
  unsigned gen_seed = 1;
  std::string gen_out = "-";
  cmd_gen->add_option("-n,--polygons", gen_n, "number of polygons");
  cmd_gen->add_option("-v,--vertices", gen_v, "vertices per polygon");
  cmd_gen->add_option("-b,--bbox", gen_bbox, "bounding box side");
  cmd_gen->add_option("-s,--seed", gen_seed, "seed");
  cmd_gen->add_option("-o,--output", gen_out, "instance JSON path (- for stdout)");

  CLI11_PARSE(app, argc, argv);
  const EngineKind kind = engine_of(engine);

  try {
    if (*cmd_run) {
      const InstanceFile inst = parse_instance(slurp(run_in));
      RunStats stats;
      Cover cover;
      if (inst.kind == InstanceKind::segments || run_segments) {
        const std::vector<Segment> segs = inst.kind == InstanceKind::segments
                                              ? inst.segments
                                              : boundary_segments(inst.polygons);
        cover = convexify_segments(segs, &stats);
      } else {
        cover = convexify(inst.polygons, kind, &stats);
      }
      spit(run_out, emit_cover(cover));
      print_stats(engine, stats, cover);
      return 0;
    }

    if (*cmd_verify) {
      const InstanceFile inst = parse_instance(slurp(ver_in));
      const Cover cover = parse_cover(slurp(ver_cover));
      const ValidationReport rep =
          validate_cover(validation_inputs(inst, ver_segments), cover, ver_seed);
      std::cout << "disjoint            " << (rep.disjoint ? "ok" : "FAIL") << "\n"
                << "partition           " << (rep.partitioned ? "ok" : "FAIL") << "\n"
                << "hull of each group  " << (rep.hull_of_group ? "ok" : "FAIL") << "\n"
                << "tightness sampling  "
                << (rep.tight_sampling_failures == 0
                        ? "ok"
                        : "FAIL (" + std::to_string(rep.tight_sampling_failures) +
                              " separating lines)")
                << "\n"
                << "total area          " << rep.area.str() << "\n"
                << (rep.ok() ? "VALID" : "INVALID") << "\n";
      return rep.ok() ? 0 : 1;
    }

    if (*cmd_trace) {
      const InstanceFile inst = parse_instance(slurp(trc_in));
      if (inst.kind != InstanceKind::polygons)
        throw std::runtime_error("trace requires a polygons instance");
      const TraceArtifacts t = run_traced(inst.polygons, kind);
      const std::vector<std::string> frames = render_trace_frames(t);
      namespace fs = std::filesystem;
      std::error_code ec;
      fs::create_directories(trc_dir, ec);
      if (ec) throw std::runtime_error("cannot create " + trc_dir + ": " + ec.message());
      for (std::size_t i = 0; i < frames.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%03zu.svg", i);
        spit((fs::path(trc_dir) / name).string(), frames[i]);
      }
      spit((fs::path(trc_dir) / "events.jsonl").string(), trace_log_json(t));
      spit((fs::path(trc_dir) / "cover.json").string(), emit_cover(t.cover));
      std::cerr << frames.size() << " frames, " << t.events.size() << " events -> "
                << trc_dir << "\n";
      print_stats(engine, t.stats, t.cover);
      return 0;
    }

    if (*cmd_bench) {
      std::printf("%12s %12s %10s %12s %12s\n", "N", "wall_ms", "merges", "deleted",
                  "rays");
      for (long n : bench_sizes) {
        const BenchRow row = bench_one(n, bench_seed, kind);
        std::printf("%12ld %12.2f %10d %12lld %12d\n", row.n_vertices, row.wall_ms,
                    row.stats.merges, row.stats.deleted_vertices, row.stats.rays);
      }
      return 0;
    }

    if (*cmd_gen) {
      spit(gen_out, emit_instance(gen_instance(gen_n, gen_v, gen_bbox, gen_seed)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
