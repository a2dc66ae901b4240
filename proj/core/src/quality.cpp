#include "frontmesh/quality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>

#include "frontmesh/lfs.hpp"

namespace frontmesh {

double theorem1_bound(double b_star, double theta) {
  const double alpha = alpha_of(theta);
  return 2.0 * (b_star + alpha / (alpha - 1.0) + 1.0);
}

double small_angle_min_bound(double phi, double ratio) {
  return std::atan(std::sin(phi) / ((1.0 + ratio) / ratio - std::cos(phi)));
}

double small_angle_max_bound(double phi) { return 0.5 * kPi + 0.5 * phi; }

std::pair<double, double> small_angle_bounds(double phi, double ratio) {
  return {small_angle_min_bound(phi, ratio), small_angle_max_bound(phi)};
}

namespace {

std::array<int, 2> shortest_edge(const std::array<Point2, 3>& c) {
  int best = 0;
  double best_len = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    const double l = distance(c[i], c[(i + 1) % 3]);
    if (l < best_len) {
      best_len = l;
      best = i;
    }
  }
  return {best, (best + 1) % 3};
}

}  // namespace

QualityReport verify(const VerifyInput& in) {
  const Mesh& mesh = *in.mesh;
  const SplitResult& split = *in.split;
  QualityReport r;
  r.mode = in.mode == DelaunayMode::truly ? "truly" : "constrained";
  r.theta = in.theta;
  r.n_star = split.bounds.n_star;
  r.a_star = split.bounds.a_star;
  r.b_star = split.bounds.b_star;
  r.ratio = split.bounds.ratio;
  r.conditions_satisfied = split.bounds.conditions_satisfied;
  r.theorem1_bound = theorem1_bound(r.b_star, in.theta);

  const VertexContext ctx{&split.vertices, &in.small_angles, split.bounds.b_star};
  for (const auto& rec : in.small_angles) {
    SmallAngleReport s;
    s.apex = rec.apex;
    s.segments = rec.segments;
    s.phi = rec.angle;
    s.min_bound = small_angle_min_bound(rec.angle, split.bounds.ratio);
    s.max_bound = small_angle_max_bound(rec.angle);
    r.small_angles.push_back(s);
  }

  const auto tris = mesh.domain_triangles();
  r.vertex_count = mesh.vertex_count();
  r.triangle_count = tris.size();
  r.min_angle = std::numeric_limits<double>::infinity();
  r.min_angle_excluding_skipped = std::numeric_limits<double>::infinity();
  r.max_angle = 0.0;
  r.angle_target_met = true;

  std::vector<double> shortest(mesh.vertex_count(), std::numeric_limits<double>::infinity());
  for (TriangleId t : tris) {
    const auto c = mesh.corners(t);
    const auto v = mesh.vertices(t);
    const auto a = angles(c[0], c[1], c[2]);
    const double lo = std::min({a[0], a[1], a[2]});
    r.min_angle = std::min(r.min_angle, lo);
    r.max_angle = std::max(r.max_angle, std::max({a[0], a[1], a[2]}));
    for (int i = 0; i < 3; ++i) {
      const double l = distance(c[i], c[(i + 1) % 3]);
      shortest[v[i]] = std::min(shortest[v[i]], l);
      shortest[v[(i + 1) % 3]] = std::min(shortest[v[(i + 1) % 3]], l);
    }

    bool skipped = false;
    if (is_skinny(c[0], c[1], c[2], in.theta)) {
      const auto se = shortest_edge(c);
      const VertexId p = v[se[0]], q = v[se[1]];
      if (across_small_angle(p, q, mesh, ctx)) {
        skipped = true;
        ++r.skipped_triangles;
        const SmallAngleRecord* rec = small_angle_between(p, q, ctx);
        auto& rep = r.small_angles[static_cast<std::size_t>(rec - in.small_angles.data())];
        ++rep.skipped_triangles;
        rep.realized_min_angle = std::min(rep.realized_min_angle.value_or(kPi), lo);
        double worst = std::max({a[0], a[1], a[2]});
        if (const auto e = mesh.find_edge(p, q)) {
          const TriangleId other = mesh.neighbor(e->tri, e->edge);
          for (TriangleId side : {e->tri, other}) {
            if (mesh.is_ghost(side) || mesh.exterior(side)) continue;
            const auto sc = mesh.corners(side);
            worst = std::max(worst, max_angle(sc[0], sc[1], sc[2]));
          }
        }
        rep.realized_max_angle = std::max(rep.realized_max_angle.value_or(0.0), worst);
      }
    }
    if (!skipped) {
      r.min_angle_excluding_skipped = std::min(r.min_angle_excluding_skipped, lo);
      if (is_skinny(c[0], c[1], c[2], in.theta)) r.angle_target_met = false;
    }
  }
  if (tris.empty()) {
    r.min_angle = r.min_angle_excluding_skipped = 0.0;
    r.angle_target_met = false;
  }

  for (VertexId v = 0; v < mesh.vertex_count(); ++v) {
    if (!std::isfinite(shortest[v])) continue;
    r.worst_size_ratio = std::max(r.worst_size_ratio, lfs_oracle(*in.input, mesh.point(v)) / shortest[v]);
  }

  const Pslg& sub = split.refined;
  r.pslg_conforming = true;
  for (const auto& s : sub.segments)
    if (!mesh.is_constrained_edge(static_cast<VertexId>(s.a), static_cast<VertexId>(s.b))) r.pslg_conforming = false;

  for (VertexId v = 0; v < mesh.vertex_count(); ++v) {
    if (mesh.origin(v) != VertexOrigin::steiner) continue;
    const Point2 x = mesh.point(v);
    for (const auto& s : sub.segments) {
      const Point2 p = sub.vertices[s.a], q = sub.vertices[s.b];
      if (dot_sign(x, p, q) >= 0) continue;
      if (in.mode == DelaunayMode::constrained) {
        const double at_p = angles(p, q, x)[0], at_q = angles(q, p, x)[0];
        if (at_p >= in.theta && at_q >= in.theta) continue;
      }
      ++r.encroachment_events;
    }
  }

  const DelaunayCheck dc = check_delaunay(mesh, in.mode);
  r.delaunay_ok = dc.ok;
  r.delaunay_violations = dc.violations;
  return r;
}

AngleHistogram angle_histogram(const Mesh& mesh, std::size_t bins) {
  AngleHistogram h;
  if (bins == 0) return h;
  h.bin_width = kPi / static_cast<double>(bins);
  h.min_angles.assign(bins, 0);
  h.max_angles.assign(bins, 0);
  auto bin = [&](double a) { return std::min(bins - 1, static_cast<std::size_t>(a / h.bin_width)); };
  for (TriangleId t : mesh.domain_triangles()) {
    const auto c = mesh.corners(t);
    ++h.min_angles[bin(min_angle(c[0], c[1], c[2]))];
    ++h.max_angles[bin(max_angle(c[0], c[1], c[2]))];
  }
  return h;
}

std::string to_json(const QualityReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["mode"] = r.mode;
  j["theta"] = r.theta;
  j["theta_deg"] = degrees(r.theta);
  j["n_star"] = r.n_star;
  j["a_star"] = r.a_star;
  j["b_star"] = r.b_star;
  j["ratio"] = r.ratio;
  j["conditions_satisfied"] = r.conditions_satisfied;
  j["vertex_count"] = r.vertex_count;
  j["triangle_count"] = r.triangle_count;
  j["skipped_triangles"] = r.skipped_triangles;
  j["min_angle_overall"] = r.min_angle;
  j["min_angle_excluding_skipped"] = r.min_angle_excluding_skipped;
  j["max_angle"] = r.max_angle;
  j["worst_size_ratio"] = r.worst_size_ratio;
  j["theorem1_bound"] = r.theorem1_bound;
  j["encroachment_events"] = r.encroachment_events;
  j["delaunay_violations"] = r.delaunay_violations;
  j["delaunay_ok"] = r.delaunay_ok;
  j["pslg_conforming"] = r.pslg_conforming;
  j["angle_target_met"] = r.angle_target_met;
  ordered_json smalls = ordered_json::array();
  for (const auto& s : r.small_angles) {
    ordered_json e;
    e["apex"] = s.apex;
    e["segments"] = {s.segments.first, s.segments.second};
    e["phi"] = s.phi;
    e["theorem2_bound"] = s.min_bound;
    e["max_angle_bound"] = s.max_bound;
    e["skipped_triangles"] = s.skipped_triangles;
    e["realized_min_angle"] = s.realized_min_angle ? ordered_json(*s.realized_min_angle) : ordered_json();
    e["realized_max_angle"] = s.realized_max_angle ? ordered_json(*s.realized_max_angle) : ordered_json();
    smalls.push_back(e);
  }
  j["small_angles"] = smalls;
  j["passed"] = r.passed();
  return j.dump(2) + "\n";
}

}  // namespace frontmesh
