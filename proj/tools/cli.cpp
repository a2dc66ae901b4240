#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "frontmesh/errors.hpp"
#include "frontmesh/io.hpp"

namespace frontmesh::cli {

namespace {

std::shared_ptr<spdlog::logger> make_logger() {
  auto log = spdlog::get("frontmesh");
  if (!log) log = spdlog::stderr_color_mt("frontmesh");
  log->set_pattern("%^[%l]%$ %v");
  log->set_level(spdlog::level::warn);
  if (const char* env = std::getenv("FRONTMESH_LOG")) log->set_level(spdlog::level::from_str(env));
  return log;
}

std::string strip_extension(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
  return path.substr(0, dot);
}

template <class F>
void write_file(const std::string& path, F&& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  body(out);
}

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::insert: return "insert";
    case EventKind::skip: return "skip";
    case EventKind::encroach: return "encroach";
  }
  return "?";
}

}  // namespace

std::optional<int> parse_args(int argc, char** argv, RunManifest& m) {
  CLI::App app{"Quality triangular mesh generator for planar straight line graphs"};
  std::string mode = "truly";
  int nstar = 0;
  app.add_option("input", m.input, "Input .poly file")->required();
  app.add_option("--angle", m.options.theta_deg, "Minimum angle target in degrees (below 30)")->default_val(20.0);
  app.add_option("--mode", mode, "Delaunay flavour")->check(CLI::IsMember({"truly", "constrained"}))->default_val("truly");
  app.add_option("--nstar", nstar, "Override the segment split count n*");
  app.add_flag("--strict", m.options.strict, "Abort on the first encroachment");
  app.add_option("--output", m.output_prefix, "Output path prefix");
  app.add_option("--svg", m.svg, "Write an SVG drawing");
  app.add_option("--report", m.report, "Quality report path (default <prefix>.report.json)");
  app.add_flag("--dump-lfs", m.dump_lfs, "Write sampled feature size functions");
  app.add_flag("--dump-split", m.dump_split, "Write per-segment split plans");
  app.add_flag("--dump-events", m.dump_events, "Write the refinement event log");
  app.add_option("--max-insertions", m.options.max_insertions, "Insertion cap")->default_val(1000000);
  app.add_option("--threads", m.options.threads, "Worker threads for feature sizes")->default_val(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  m.options.mode = mode == "truly" ? DelaunayMode::truly : DelaunayMode::constrained;
  if (nstar > 0) m.options.n_star = nstar;
  if (m.output_prefix.empty()) m.output_prefix = strip_extension(m.input);
  return std::nullopt;
}

int run(const RunManifest& m) {
  auto log = make_logger();
  Pslg pslg;
  PipelineResult r;
  try {
    pslg = read_poly_file(m.input);
    log->info("read {} vertices, {} segments, {} holes", pslg.vertices.size(), pslg.segments.size(),
              pslg.holes.size());
    r = run_pipeline(pslg, m.options);
  } catch (const NonTerminationError& e) {
    log->error("{}", e.what());
    return kNonTermination;
  } catch (const EncroachmentError& e) {
    log->error("{}", e.what());
    return kVerificationFailed;
  } catch (const MeshError& e) {
    log->error("{}", e.what());
    return kVerificationFailed;
  } catch (const std::exception& e) {
    log->error("{}", e.what());
    return kInputError;
  }
  for (const auto& w : r.warnings) log->warn("{}", w);
  const auto& b = r.prepared.split.bounds;
  log->info("n* = {}, A* = {:.6f}, B* = {:.6f}, R = {:.6f}", b.n_star, b.a_star, b.b_star, b.ratio);
  log->info("{} insertions, {} skipped, {} vertices, {} triangles", r.stats.insertions, r.stats.skipped_small_angle,
            r.report.vertex_count, r.report.triangle_count);

  try {
    const Mesh& mesh = r.prepared.mesh;
    const int base = pslg.first_index;
    write_file(m.output_prefix + ".node", [&](std::ostream& o) { write_node(o, mesh, r.vertex_markers(), base); });
    write_file(m.output_prefix + ".ele", [&](std::ostream& o) { write_ele(o, mesh, base); });
    write_file(m.report.value_or(m.output_prefix + ".report.json"), [&](std::ostream& o) { o << to_json(r.report); });
    if (m.svg) {
      SvgOptions so;
      so.shaded = r.skipped_triangles();
      write_file(*m.svg, [&](std::ostream& o) { o << emit_svg(mesh, r.prepared.split.refined, so); });
    }
    if (m.dump_lfs)
      write_file(m.output_prefix + ".lfs.csv", [&](std::ostream& o) { write_lfs_csv(o, r.sizes, 201); });
    if (m.dump_split) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (std::size_t s = 0; s < r.prepared.split.segments.size(); ++s) {
        const auto& ss = r.prepared.split.segments[s];
        j.push_back({{"segment", s}, {"t_star", ss.t_star}, {"pieces", ss.pieces}, {"positions", ss.params}});
      }
      write_file(m.output_prefix + ".split.json", [&](std::ostream& o) { o << j.dump(2) << '\n'; });
    }
    if (m.dump_events) {
      write_file(m.output_prefix + ".events.jsonl", [&](std::ostream& o) {
        for (const auto& ev : r.stats.events) {
          nlohmann::ordered_json j;
          j["kind"] = kind_name(ev.kind);
          j["triangle"] = ev.triangle;
          j["point"] = {ev.point.x, ev.point.y};
          j["offcenter"] = ev.offcenter;
          j["shortest_edge"] = ev.shortest_edge;
          if (ev.kind == EventKind::insert) j["nearest"] = ev.nearest;
          o << j.dump() << '\n';
        }
      });
    }
  } catch (const std::exception& e) {
    log->error("{}", e.what());
    return kInputError;
  }

  if (!r.report.passed() || r.stats.encroachment_events > 0) {
    log->error("verification failed: delaunay_ok={} conforming={} encroachments={} angle_target_met={}",
               r.report.delaunay_ok, r.report.pslg_conforming, r.report.encroachment_events + r.stats.encroachment_events,
               r.report.angle_target_met);
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace frontmesh::cli
