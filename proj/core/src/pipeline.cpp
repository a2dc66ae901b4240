#include "frontmesh/pipeline.hpp"

#include <algorithm>

#include "frontmesh/errors.hpp"

namespace frontmesh {

std::vector<int> PipelineResult::vertex_markers() const {
  std::vector<int> m = prepared.split.refined.vertex_markers;
  m.resize(prepared.mesh.vertex_count(), 0);
  return m;
}

std::vector<std::array<VertexId, 3>> PipelineResult::skipped_triangles() const {
  std::vector<std::array<VertexId, 3>> out;
  const Mesh& mesh = prepared.mesh;
  const VertexContext ctx{&prepared.split.vertices, &small_angles, prepared.split.bounds.b_star};
  const double theta = report.theta;
  for (TriangleId t : mesh.domain_triangles()) {
    const auto c = mesh.corners(t);
    if (!is_skinny(c[0], c[1], c[2], theta)) continue;
    const auto se = steiner_point(c[0], c[1], c[2], theta).shortest_edge;
    const auto& v = mesh.vertices(t);
    if (across_small_angle(v[se[0]], v[se[1]], mesh, ctx)) out.push_back(v);
  }
  return out;
}

PipelineResult run_pipeline(const Pslg& pslg, const PipelineOptions& opt) {
  require_valid(pslg);
  const double theta = radians(opt.theta_deg);
  check_theta(theta);

  PipelineResult r;
  r.sizes = feature_sizes(pslg, opt.threads);
  for (const auto& f : r.sizes) r.maps.push_back(solve_mapping(f));
  r.prepared = prepare_mesh(pslg, r.sizes, r.maps, theta, opt.mode, opt.n_star);
  const SplitBounds& b = r.prepared.split.bounds;
  if (!b.conditions_satisfied) r.warnings.push_back("lemma conditions unsatisfied for n* = " + std::to_string(b.n_star));
  if (r.prepared.doublings > 0)
    r.warnings.push_back("n* doubled " + std::to_string(r.prepared.doublings) + " times to recover the segments");
  r.small_angles = classify_small_angles(pslg, b.ratio);

  RefineConfig cfg;
  cfg.theta = theta;
  cfg.mode = opt.mode;
  cfg.bounds = b;
  cfg.small_angles = r.small_angles;
  cfg.max_insertions = opt.max_insertions;
  cfg.strict = opt.strict;
  cfg.record_events = opt.record_events;
  r.stats = refine(r.prepared.mesh, r.prepared.split, cfg);

  VerifyInput vi;
  vi.mesh = &r.prepared.mesh;
  vi.input = &pslg;
  vi.split = &r.prepared.split;
  vi.theta = theta;
  vi.mode = opt.mode;
  vi.small_angles = r.small_angles;
  r.report = verify(vi);
  return r;
}

}  // namespace frontmesh
