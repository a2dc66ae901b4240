#include "frontmesh/refine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace frontmesh {

bool is_skinny(Point2 a, Point2 b, Point2 c, double theta) { return min_angle(a, b, c) < theta; }

Point2 offcenter(Point2 p, Point2 q, Point2 hint, double theta) {
  const Point2 m = midpoint(p, q);
  const Point2 d = q - p;
  const double len = norm(d);
  Point2 n{-d.y / len, d.x / len};
  if (dot(hint - m, n) < 0.0) n = -1.0 * n;
  return m + (0.5 * len / std::tan(0.5 * theta)) * n;
}

SteinerChoice steiner_point(Point2 a, Point2 b, Point2 c, double theta) {
  const std::array<Point2, 3> v{a, b, c};
  int best = 0;
  double best_len = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    const double l = distance(v[i], v[(i + 1) % 3]);
    if (l < best_len) {
      best_len = l;
      best = i;
    }
  }
  const Point2 p = v[best], q = v[(best + 1) % 3], r = v[(best + 2) % 3];
  SteinerChoice out;
  out.shortest_edge = {best, (best + 1) % 3};
  const Point2 off = offcenter(p, q, r, theta);
  const Point2 m = midpoint(p, q);
  const Point2 cc = circumcircle(a, b, c).center;
  const Point2 n = (1.0 / distance(off, m)) * (off - m);
  if (distance(off, m) <= dot(cc - m, n)) {
    out.point = off;
    out.used_offcenter = true;
  } else {
    out.point = cc;
    out.used_offcenter = false;
  }
  return out;
}

const SmallAngleRecord* small_angle_between(VertexId p, VertexId q, const VertexContext& ctx) {
  const auto& info = *ctx.split_vertices;
  if (p >= info.size() || q >= info.size()) return nullptr;
  const auto& sp = info[p].segments;
  const auto& sq = info[q].segments;
  for (std::size_t s : sp)
    if (std::find(sq.begin(), sq.end(), s) != sq.end()) return nullptr;
  for (std::size_t s1 : sp) {
    for (std::size_t s2 : sq) {
      const auto key = std::make_pair(std::min(s1, s2), std::max(s1, s2));
      for (const auto& rec : *ctx.small_angles)
        if (rec.segments == key) return &rec;
    }
  }
  return nullptr;
}

bool across_small_angle(VertexId p, VertexId q, const Mesh& mesh, const VertexContext& ctx) {
  if (!small_angle_between(p, q, ctx)) return false;
  const auto& info = *ctx.split_vertices;
  const double limit = std::max(info[p].lfs, info[q].lfs) / ctx.b_star;
  return distance(mesh.point(p), mesh.point(q)) < limit;
}

bool check_encroachment(Point2 candidate, const std::array<Point2, 3>& tri,
                        const std::vector<std::array<Point2, 2>>& subsegments, DelaunayMode mode) {
  const Point2 g{(tri[0].x + tri[1].x + tri[2].x) / 3.0, (tri[0].y + tri[1].y + tri[2].y) / 3.0};
  for (const auto& s : subsegments) {
    if (segments_intersect(g, candidate, s[0], s[1])) return true;
    if (mode == DelaunayMode::truly && dot_sign(candidate, s[0], s[1]) < 0) return true;
  }
  return false;
}

PreparedMesh prepare_mesh(const Pslg& pslg, const std::vector<FeatureSizeFunction>& sizes,
                          const std::vector<MappingFunction>& maps, double theta, DelaunayMode mode,
                          std::optional<int> n_star, int max_doublings) {
  SplitBounds bounds = choose_nstar(maps, theta, mode, n_star);
  for (int doublings = 0;; ++doublings) {
    SplitResult sr = split(pslg, bounds, sizes, maps);
    std::vector<VertexOrigin> origins;
    for (const auto& v : sr.vertices) origins.push_back(v.origin);
    Mesh mesh = Mesh::triangulate(sr.refined.vertices, origins);
    const bool ok = mode == DelaunayMode::constrained || pslg_recovered(mesh, sr.refined);
    if (ok) {
      for (const auto& s : sr.refined.segments)
        mesh.insert_constraint(static_cast<VertexId>(s.a), static_cast<VertexId>(s.b));
      mesh.mark_exterior(pslg.holes);
      return {std::move(sr), std::move(mesh), doublings, true};
    }
    if (doublings == max_doublings)
      throw NonTerminationError("subsegments missing from the Delaunay triangulation after " +
                                    std::to_string(max_doublings) + " doublings of n*",
                                RefineStats{});
    const double required = bounds.required_a_star;
    bounds = bounds_for(2 * bounds.n_star, bounds.t_min);
    bounds.required_a_star = required;
    bounds.conditions_satisfied = conditions_hold(bounds.a_star, bounds.b_star, theta, mode);
  }
}

namespace {

struct Entry {
  double len;
  std::array<VertexId, 3> key;
  TriangleId tri;
  std::uint32_t gen;
  bool operator>(const Entry& o) const { return len > o.len || (len == o.len && key > o.key); }
};

}  // namespace

RefineStats refine(Mesh& mesh, const SplitResult& split, const RefineConfig& config) {
  check_theta(config.theta);
  RefineStats stats;
  const VertexContext ctx{&split.vertices, &config.small_angles, config.bounds.b_star};
  std::vector<std::array<Point2, 2>> subsegs;
  for (const auto& s : split.refined.segments)
    subsegs.push_back({split.refined.vertices[s.a], split.refined.vertices[s.b]});

  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  auto push = [&](TriangleId t) {
    if (!mesh.alive(t) || mesh.is_ghost(t) || mesh.exterior(t)) return;
    const auto c = mesh.corners(t);
    if (!is_skinny(c[0], c[1], c[2], config.theta)) return;
    auto key = mesh.vertices(t);
    std::sort(key.begin(), key.end());
    const double len = std::min({distance(c[0], c[1]), distance(c[1], c[2]), distance(c[2], c[0])});
    queue.push({len, key, t, mesh.generation(t)});
    stats.queue_max = std::max(stats.queue_max, queue.size());
  };
  for (TriangleId t : mesh.domain_triangles()) push(t);

  auto log = [&](RefineEvent ev) {
    if (config.record_events) stats.events.push_back(ev);
  };

  while (!queue.empty()) {
    const Entry e = queue.top();
    queue.pop();
    if (!mesh.alive(e.tri) || mesh.generation(e.tri) != e.gen) continue;
    const auto c = mesh.corners(e.tri);
    const auto v = mesh.vertices(e.tri);
    const SteinerChoice choice = steiner_point(c[0], c[1], c[2], config.theta);
    const VertexId p = v[choice.shortest_edge[0]], q = v[choice.shortest_edge[1]];

    RefineEvent ev;
    ev.triangle = v;
    ev.point = choice.point;
    ev.offcenter = choice.used_offcenter;
    ev.shortest_edge = e.len;

    if (across_small_angle(p, q, mesh, ctx)) {
      ++stats.skipped_small_angle;
      ev.kind = EventKind::skip;
      log(ev);
      continue;
    }
    auto encroached = [&] {
      ++stats.encroachment_events;
      ev.kind = EventKind::encroach;
      log(ev);
      if (config.strict) throw EncroachmentError("Steiner point encroaches upon a subsegment", stats);
    };
    if (check_encroachment(choice.point, c, subsegs, config.mode)) {
      encroached();
      continue;
    }
    if (stats.insertions >= config.max_insertions)
      throw NonTerminationError("refinement exceeded " + std::to_string(config.max_insertions) + " insertions",
                                stats);
    InsertResult r;
    try {
      r = mesh.insert_vertex_detailed(choice.point, VertexOrigin::steiner, e.tri);
    } catch (const MeshError&) {
      encroached();
      continue;
    }
    ++stats.insertions;
    double nearest = std::numeric_limits<double>::infinity();
    for (TriangleId t : r.created)
      for (VertexId w : mesh.vertices(t))
        if (w != kGhost && w != r.vertex) nearest = std::min(nearest, distance(mesh.point(w), choice.point));
    ev.kind = EventKind::insert;
    ev.nearest = nearest;
    ev.vertex = r.vertex;
    log(ev);
    for (TriangleId t : r.created) push(t);
    if (mesh.alive(e.tri) && mesh.generation(e.tri) == e.gen) push(e.tri);
  }
  return stats;
}

}  // namespace frontmesh
