#include "frontmesh/cdt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "frontmesh/errors.hpp"

namespace frontmesh {

namespace {
inline int nx(int i) { return (i + 1) % 3; }
inline int pv(int i) { return (i + 2) % 3; }

bool contains(const std::vector<TriangleId>& v, TriangleId t) { return std::find(v.begin(), v.end(), t) != v.end(); }
}  // namespace

std::array<Point2, 3> Mesh::corners(TriangleId t) const {
  const auto& v = tris_[t].v;
  return {points_[v[0]], points_[v[1]], points_[v[2]]};
}

int Mesh::edge_index(TriangleId t, VertexId a, VertexId b) const {
  const auto& v = tris_[t].v;
  for (int i = 0; i < 3; ++i)
    if (v[nx(i)] == a && v[pv(i)] == b) return i;
  return -1;
}

TriangleId Mesh::new_triangle(const std::array<VertexId, 3>& v, bool exterior) {
  TriangleId id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<TriangleId>(tris_.size());
    tris_.emplace_back();
  }
  Tri& t = tris_[id];
  const std::uint32_t gen = t.generation + 1;
  t = Tri{};
  t.v = v;
  t.alive = true;
  t.exterior = exterior;
  t.generation = gen;
  return id;
}

void Mesh::kill(TriangleId t) {
  tris_[t].alive = false;
  tris_[t].generation++;
  free_.push_back(t);
}

bool Mesh::in_circle(TriangleId t, Point2 p) const {
  const auto& v = tris_[t].v;
  if (v[2] == kGhost) {
    const Point2 a = points_[v[0]], b = points_[v[1]];
    const int o = orient2d(a, b, p);
    return o > 0 || (o == 0 && strictly_between(a, b, p));
  }
  return incircle(points_[v[0]], points_[v[1]], points_[v[2]], p) > 0;
}

std::vector<TriangleId> Mesh::replace(const std::vector<TriangleId>& cavity,
                                      const std::vector<std::array<VertexId, 3>>& fresh,
                                      std::optional<std::array<VertexId, 2>> constrained_inner) {
  std::vector<Boundary> boundary;
  for (TriangleId t : cavity) {
    const Tri& tr = tris_[t];
    for (int i = 0; i < 3; ++i) {
      const TriangleId nb = tr.n[i];
      if (contains(cavity, nb)) continue;
      const VertexId u = tr.v[nx(i)], w = tr.v[pv(i)];
      boundary.push_back({u, w, nb, edge_index(nb, w, u), constrained(t, i)});
    }
  }
  bool ext = false;
  for (TriangleId t : cavity) {
    if (!is_ghost(t)) {
      ext = tris_[t].exterior;
      break;
    }
  }
  for (TriangleId t : cavity) kill(t);

  std::vector<TriangleId> ids;
  ids.reserve(fresh.size());
  for (const auto& v : fresh) ids.push_back(new_triangle(v, v[2] == kGhost || ext));

  struct Open {
    VertexId u, w;
    TriangleId t;
    int i;
  };
  std::vector<Open> open;
  for (TriangleId id : ids) {
    for (int i = 0; i < 3; ++i) {
      const VertexId u = tris_[id].v[nx(i)], w = tris_[id].v[pv(i)];
      auto b = std::find_if(boundary.begin(), boundary.end(), [&](const Boundary& e) { return e.u == u && e.w == w; });
      if (b != boundary.end()) {
        tris_[id].n[i] = b->outside;
        tris_[b->outside].n[b->outside_edge] = id;
        if (b->constrained) tris_[id].constrained |= static_cast<std::uint8_t>(1u << i);
        boundary.erase(b);
        continue;
      }
      auto o = std::find_if(open.begin(), open.end(), [&](const Open& e) { return e.u == w && e.w == u; });
      if (o == open.end()) {
        open.push_back({u, w, id, i});
        continue;
      }
      tris_[id].n[i] = o->t;
      tris_[o->t].n[o->i] = id;
      if (constrained_inner && ((u == (*constrained_inner)[0] && w == (*constrained_inner)[1]) ||
                                (u == (*constrained_inner)[1] && w == (*constrained_inner)[0]))) {
        tris_[id].constrained |= static_cast<std::uint8_t>(1u << i);
        tris_[o->t].constrained |= static_cast<std::uint8_t>(1u << o->i);
      }
      open.erase(o);
    }
  }
  if (!open.empty() || !boundary.empty()) throw MeshError("cavity retriangulation does not close");
  for (TriangleId id : ids)
    for (VertexId v : tris_[id].v)
      if (v != kGhost) vertex_tri_[v] = id;
  last_ = ids.front();
  return ids;
}

// ------------------------------------------------------------ point location

TriangleId Mesh::locate(Point2 p, TriangleId hint) const {
  TriangleId t = alive(hint) ? hint : (alive(last_) ? last_ : kNoTriangle);
  if (t == kNoTriangle) {
    for (TriangleId k = 0; k < tris_.size(); ++k)
      if (tris_[k].alive) {
        t = k;
        break;
      }
  }
  if (t == kNoTriangle) throw MeshError("empty mesh");
  if (is_ghost(t)) t = tris_[t].n[2];
  const std::size_t max_steps = 4 * tris_.size() + 64;
  for (std::size_t step = 0; step < max_steps; ++step) {
    if (is_ghost(t)) return t;
    rng_ ^= rng_ << 13;
    rng_ ^= rng_ >> 7;
    rng_ ^= rng_ << 17;
    const int start = static_cast<int>(rng_ % 3);
    bool moved = false;
    const auto& v = tris_[t].v;
    for (int k = 0; k < 3; ++k) {
      const int i = (start + k) % 3;
      if (orient2d(points_[v[nx(i)]], points_[v[pv(i)]], p) < 0) {
        t = tris_[t].n[i];
        moved = true;
        break;
      }
    }
    if (!moved) {
      last_ = t;
      return t;
    }
  }
  for (TriangleId k = 0; k < tris_.size(); ++k) {
    if (!tris_[k].alive || is_ghost(k)) continue;
    const auto c = corners(k);
    if (orient2d(c[0], c[1], p) >= 0 && orient2d(c[1], c[2], p) >= 0 && orient2d(c[2], c[0], p) >= 0) return k;
  }
  for (TriangleId k = 0; k < tris_.size(); ++k)
    if (tris_[k].alive && is_ghost(k) && orient2d(points_[tris_[k].v[0]], points_[tris_[k].v[1]], p) > 0) return k;
  throw MeshError("point location failed");
}

// ------------------------------------------------------------------ insertion

InsertResult Mesh::insert_existing(VertexId id, TriangleId hint) {
  const Point2 p = points_[id];
  const TriangleId t = locate(p, hint);
  const auto& tv = tris_[t].v;
  const int real_edges = is_ghost(t) ? 1 : 3;
  for (VertexId v : tv)
    if (v != kGhost && points_[v] == p) throw MeshError("duplicate point");
  for (int i = 0; i < 3; ++i) {
    if (is_ghost(t) && i != 2) continue;
    if (!constrained(t, i)) continue;
    if (strictly_between(points_[tv[nx(i)]], points_[tv[pv(i)]], p)) throw MeshError("would split constraint");
  }
  (void)real_edges;

  std::vector<TriangleId> cavity{t};
  std::vector<TriangleId> visited{t};
  std::vector<TriangleId> stack{t};
  while (!stack.empty()) {
    const TriangleId c = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      if (constrained(c, i)) continue;
      const TriangleId nb = tris_[c].n[i];
      if (contains(visited, nb)) continue;
      visited.push_back(nb);
      if (in_circle(nb, p)) {
        cavity.push_back(nb);
        stack.push_back(nb);
      }
    }
  }

  std::vector<std::array<VertexId, 3>> fresh;
  for (TriangleId c : cavity) {
    for (int i = 0; i < 3; ++i) {
      const TriangleId nb = tris_[c].n[i];
      const bool inner = contains(cavity, nb);
      if (inner && constrained(c, i)) throw MeshError("cavity swallowed a constrained edge");
      if (inner) continue;
      const VertexId u = tris_[c].v[nx(i)], w = tris_[c].v[pv(i)];
      if (u == kGhost) {
        fresh.push_back({w, id, kGhost});
      } else if (w == kGhost) {
        fresh.push_back({id, u, kGhost});
      } else {
        if (orient2d(points_[u], points_[w], p) <= 0) throw MeshError("insertion cavity is not star-shaped");
        fresh.push_back({u, w, id});
      }
    }
  }
  InsertResult r;
  r.vertex = id;
  r.created = replace(cavity, fresh, std::nullopt);
  return r;
}

InsertResult Mesh::insert_vertex_detailed(Point2 p, VertexOrigin origin, TriangleId hint) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw MeshError("non-finite point");
  const VertexId id = static_cast<VertexId>(points_.size());
  points_.push_back(p);
  origins_.push_back(origin);
  vertex_tri_.push_back(kNoTriangle);
  try {
    return insert_existing(id, hint);
  } catch (...) {
    points_.pop_back();
    origins_.pop_back();
    vertex_tri_.pop_back();
    throw;
  }
}

VertexId Mesh::insert_vertex(Point2 p, VertexOrigin origin, TriangleId hint) {
  return insert_vertex_detailed(p, origin, hint).vertex;
}

Mesh Mesh::triangulate(std::span<const Point2> points, std::span<const VertexOrigin> origins) {
  if (points.size() < 3) throw DegenerateError("at least three points are needed");
  Mesh m;
  m.points_.assign(points.begin(), points.end());
  if (origins.empty()) {
    m.origins_.assign(points.size(), VertexOrigin::input);
  } else {
    m.origins_.assign(origins.begin(), origins.end());
  }
  m.vertex_tri_.assign(points.size(), kNoTriangle);

  std::vector<VertexId> order(points.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return lex_less(points[a], points[b]); });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (points[order[k]] == points[order[k - 1]]) throw MeshError("duplicate point");

  VertexId i0 = 0, i1 = 1, i2 = kGhost;
  for (VertexId k = 2; k < points.size(); ++k) {
    if (orient2d(points[i0], points[i1], points[k]) != 0) {
      i2 = k;
      break;
    }
  }
  if (i2 == kGhost) throw DegenerateError("all points are collinear");
  if (orient2d(points[i0], points[i1], points[i2]) < 0) std::swap(i1, i2);

  const TriangleId real = m.new_triangle({i0, i1, i2}, false);
  std::array<TriangleId, 3> ghosts{};
  for (int i = 0; i < 3; ++i) {
    const VertexId u = m.tris_[real].v[nx(i)], w = m.tris_[real].v[pv(i)];
    ghosts[i] = m.new_triangle({w, u, kGhost}, true);
    m.tris_[real].n[i] = ghosts[i];
    m.tris_[ghosts[i]].n[2] = real;
  }
  for (int i = 0; i < 3; ++i) {
    const TriangleId g = ghosts[i];
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      const TriangleId h = ghosts[j];
      // g = (a, b, G): edge (b, G) meets the ghost starting at b.
      if (m.tris_[h].v[0] == m.tris_[g].v[1]) {
        m.tris_[g].n[0] = h;
        m.tris_[h].n[1] = g;
      }
    }
  }
  for (VertexId v : {i0, i1, i2}) m.vertex_tri_[v] = real;
  m.last_ = real;

  for (VertexId k = 0; k < points.size(); ++k) {
    if (k == i0 || k == i1 || k == i2) continue;
    m.insert_existing(k, m.last_);
  }
  m.break_cocircular_ties();
  return m;
}

void Mesh::break_cocircular_ties() {
  auto key = [](VertexId a, VertexId b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  for (bool changed = true; changed;) {
    changed = false;
    for (TriangleId t = 0; t < tris_.size(); ++t) {
      if (!tris_[t].alive || is_ghost(t)) continue;
      for (int i = 0; i < 3; ++i) {
        const TriangleId nb = tris_[t].n[i];
        if (nb < t || is_ghost(nb) || constrained(t, i)) continue;
        const VertexId a = tris_[t].v[i], u = tris_[t].v[nx(i)], w = tris_[t].v[pv(i)];
        const int j = edge_index(nb, w, u);
        const VertexId d = tris_[nb].v[j];
        if (incircle(points_[a], points_[u], points_[w], points_[d]) != 0) continue;
        if (!(key(a, d) < key(u, w))) continue;
        if (orient2d(points_[a], points_[u], points_[d]) <= 0 || orient2d(points_[a], points_[d], points_[w]) <= 0)
          continue;
        replace({t, nb}, {{a, u, d}, {a, d, w}}, std::nullopt);
        changed = true;
        break;
      }
    }
  }
}

// ---------------------------------------------------------------- constraints

std::optional<EdgeRef> Mesh::find_edge(VertexId a, VertexId b) const {
  if (a >= points_.size() || b >= points_.size()) return std::nullopt;
  const TriangleId start = vertex_tri_[a];
  if (start == kNoTriangle) return std::nullopt;
  TriangleId t = start;
  for (std::size_t guard = 0; guard < tris_.size() + 3; ++guard) {
    const auto& v = tris_[t].v;
    const int k = static_cast<int>(std::find(v.begin(), v.end(), a) - v.begin());
    if (v[nx(k)] == b) return EdgeRef{t, pv(k)};
    if (v[pv(k)] == b) return EdgeRef{t, nx(k)};
    t = tris_[t].n[nx(k)];
    if (t == start) break;
  }
  return std::nullopt;
}

bool Mesh::is_constrained_edge(VertexId a, VertexId b) const {
  const auto e = find_edge(a, b);
  return e && constrained(e->tri, e->edge);
}

std::vector<std::array<VertexId, 2>> Mesh::constrained_edges() const {
  std::vector<std::array<VertexId, 2>> out;
  for (TriangleId t = 0; t < tris_.size(); ++t) {
    if (!tris_[t].alive || is_ghost(t)) continue;
    for (int i = 0; i < 3; ++i) {
      if (!constrained(t, i)) continue;
      const TriangleId nb = tris_[t].n[i];
      if (!is_ghost(nb) && nb < t) continue;
      out.push_back({tris_[t].v[nx(i)], tris_[t].v[pv(i)]});
    }
  }
  return out;
}

namespace {

// Triangulates the pseudo-polygon left of p->q bounded by chain (listed from p to q).
void fill_pocket(const std::vector<Point2>& pts, VertexId p, VertexId q, const std::vector<VertexId>& chain,
                 std::vector<std::array<VertexId, 3>>& out) {
  if (chain.empty()) return;
  std::size_t pick = 0;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    bool empty = true;
    for (std::size_t j = 0; j < chain.size() && empty; ++j)
      if (j != k && incircle(pts[p], pts[q], pts[chain[k]], pts[chain[j]]) > 0) empty = false;
    if (empty) {
      pick = k;
      break;
    }
  }
  const VertexId c = chain[pick];
  out.push_back({p, q, c});
  fill_pocket(pts, p, c, std::vector<VertexId>(chain.begin(), chain.begin() + static_cast<long>(pick)), out);
  fill_pocket(pts, c, q, std::vector<VertexId>(chain.begin() + static_cast<long>(pick) + 1, chain.end()), out);
}

}  // namespace

void Mesh::insert_constraint(VertexId a, VertexId b) {
  if (a == b || a >= points_.size() || b >= points_.size()) throw MeshError("invalid constraint endpoints");
  if (auto e = find_edge(a, b)) {
    const TriangleId nb = tris_[e->tri].n[e->edge];
    tris_[e->tri].constrained |= static_cast<std::uint8_t>(1u << e->edge);
    const VertexId u = tris_[e->tri].v[nx(e->edge)], w = tris_[e->tri].v[pv(e->edge)];
    tris_[nb].constrained |= static_cast<std::uint8_t>(1u << edge_index(nb, w, u));
    return;
  }
  const Point2 pa = points_[a], pb = points_[b];
  auto through_vertex = [&](VertexId x) {
    return x != kGhost && orient2d(pa, pb, points_[x]) == 0 && dot_sign(points_[x], pa, pb) < 0;
  };

  // Find the triangle around a whose opposite edge the segment crosses.
  TriangleId t = vertex_tri_[a];
  const TriangleId start = t;
  TriangleId first = kNoTriangle;
  for (std::size_t guard = 0; guard < tris_.size() + 3; ++guard) {
    const auto& v = tris_[t].v;
    const int k = static_cast<int>(std::find(v.begin(), v.end(), a) - v.begin());
    const VertexId u = v[nx(k)], w = v[pv(k)];
    if (through_vertex(u) || through_vertex(w)) throw MeshError("constraint passes through a vertex");
    if (!is_ghost(t) && orient2d(pa, points_[u], pb) > 0 && orient2d(pa, points_[w], pb) < 0) {
      first = t;
      break;
    }
    t = tris_[t].n[nx(k)];
    if (t == start) break;
  }
  if (first == kNoTriangle) throw MeshError("constraint leaves the triangulation");

  std::vector<TriangleId> crossed{first};
  std::vector<VertexId> left, right;
  {
    const auto& v = tris_[first].v;
    const int k = static_cast<int>(std::find(v.begin(), v.end(), a) - v.begin());
    right.push_back(v[nx(k)]);
    left.push_back(v[pv(k)]);
  }
  VertexId u = right.back(), w = left.back();
  TriangleId cur = first;
  for (std::size_t guard = 0; guard <= tris_.size(); ++guard) {
    const int e = edge_index(cur, u, w);
    if (constrained(cur, e)) throw MeshError("constraints intersect");
    const TriangleId nb = tris_[cur].n[e];
    if (is_ghost(nb)) throw MeshError("constraint leaves the triangulation");
    crossed.push_back(nb);
    const VertexId x = tris_[nb].v[edge_index(nb, w, u)];
    if (x == b) break;
    const int o = orient2d(pa, pb, points_[x]);
    if (o == 0) throw MeshError("constraint passes through a vertex");
    if (o > 0) {
      left.push_back(x);
      w = x;
    } else {
      right.push_back(x);
      u = x;
    }
    cur = nb;
  }

  std::vector<std::array<VertexId, 3>> fresh;
  fill_pocket(points_, a, b, left, fresh);
  std::vector<VertexId> rev(right.rbegin(), right.rend());
  fill_pocket(points_, b, a, rev, fresh);
  replace(crossed, fresh, std::array<VertexId, 2>{a, b});
}

// ------------------------------------------------------------------- queries

std::vector<TriangleId> Mesh::triangles() const {
  std::vector<TriangleId> out;
  for (TriangleId t = 0; t < tris_.size(); ++t)
    if (tris_[t].alive && !is_ghost(t)) out.push_back(t);
  return out;
}

std::vector<TriangleId> Mesh::domain_triangles() const {
  std::vector<TriangleId> out;
  for (TriangleId t = 0; t < tris_.size(); ++t)
    if (tris_[t].alive && !is_ghost(t) && !tris_[t].exterior) out.push_back(t);
  return out;
}

std::size_t Mesh::triangle_count() const { return triangles().size(); }

void Mesh::mark_exterior(std::span<const Point2> holes) {
  std::vector<TriangleId> stack;
  for (TriangleId t = 0; t < tris_.size(); ++t) {
    if (!tris_[t].alive) continue;
    tris_[t].exterior = is_ghost(t);
  }
  auto push = [&](TriangleId t) {
    if (!tris_[t].exterior) {
      tris_[t].exterior = true;
      stack.push_back(t);
    }
  };
  for (TriangleId t = 0; t < tris_.size(); ++t)
    if (tris_[t].alive && is_ghost(t) && !constrained(t, 2)) push(tris_[t].n[2]);
  for (Point2 h : holes) {
    const TriangleId t = locate(h);
    if (!is_ghost(t)) push(t);
  }
  while (!stack.empty()) {
    const TriangleId t = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      const TriangleId nb = tris_[t].n[i];
      if (!constrained(t, i) && !is_ghost(nb)) push(nb);
    }
  }
}

void Mesh::audit() const {
  auto fail = [](const std::string& m) { throw MeshError("audit: " + m); };
  for (TriangleId t = 0; t < tris_.size(); ++t) {
    const Tri& tr = tris_[t];
    if (!tr.alive) continue;
    const std::string ts = "triangle " + std::to_string(t);
    if (tr.v[0] == kGhost || tr.v[1] == kGhost) fail(ts + " has a misplaced ghost vertex");
    if (!is_ghost(t) && orient2d(points_[tr.v[0]], points_[tr.v[1]], points_[tr.v[2]]) <= 0)
      fail(ts + " is not counterclockwise");
    for (int i = 0; i < 3; ++i) {
      const TriangleId nb = tr.n[i];
      if (!alive(nb)) fail(ts + " has a dead neighbour");
      const int j = edge_index(nb, tr.v[pv(i)], tr.v[nx(i)]);
      if (j < 0) fail(ts + " neighbour does not share the edge");
      if (tris_[nb].n[j] != t) fail(ts + " neighbour link is not mutual");
      if (constrained(t, i) != constrained(nb, j)) fail(ts + " constraint flag is one-sided");
    }
  }
  for (VertexId v = 0; v < points_.size(); ++v) {
    const TriangleId t = vertex_tri_[v];
    if (t == kNoTriangle) continue;
    const auto& tv = tris_[t].v;
    if (!alive(t) || std::find(tv.begin(), tv.end(), v) == tv.end()) fail("stale vertex incidence");
  }
}

// ------------------------------------------------------------------- oracles

namespace {

class Grid {
 public:
  explicit Grid(const std::vector<Point2>& pts) : pts_(pts) {
    if (pts.empty()) return;
    lo_ = hi_ = pts[0];
    for (Point2 p : pts) {
      lo_.x = std::min(lo_.x, p.x);
      lo_.y = std::min(lo_.y, p.y);
      hi_.x = std::max(hi_.x, p.x);
      hi_.y = std::max(hi_.y, p.y);
    }
    const double w = std::max(hi_.x - lo_.x, 1e-300), h = std::max(hi_.y - lo_.y, 1e-300);
    const double cells = std::max(1.0, static_cast<double>(pts.size()) / 2.0);
    cell_ = std::max(std::sqrt(w * h / cells), std::max(w, h) / 4096.0);
    nx_ = static_cast<int>(w / cell_) + 1;
    ny_ = static_cast<int>(h / cell_) + 1;
    bucket_.assign(static_cast<std::size_t>(nx_) * ny_, {});
    for (VertexId v = 0; v < pts.size(); ++v) bucket_[index(cx(pts[v].x), cy(pts[v].y))].push_back(v);
  }

  template <class F>
  void near(Point2 c, double r, F&& f) const {
    if (bucket_.empty()) return;
    const int x0 = cx(c.x - r), x1 = cx(c.x + r), y0 = cy(c.y - r), y1 = cy(c.y + r);
    for (int i = x0; i <= x1; ++i)
      for (int j = y0; j <= y1; ++j)
        for (VertexId v : bucket_[index(i, j)]) f(v);
  }

 private:
  int cx(double x) const { return std::clamp(static_cast<int>(std::floor((x - lo_.x) / cell_)), 0, nx_ - 1); }
  int cy(double y) const { return std::clamp(static_cast<int>(std::floor((y - lo_.y) / cell_)), 0, ny_ - 1); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }

  const std::vector<Point2>& pts_;
  Point2 lo_, hi_;
  double cell_ = 1.0;
  int nx_ = 1, ny_ = 1;
  std::vector<std::vector<VertexId>> bucket_;
};

}  // namespace

DelaunayCheck check_delaunay(const Mesh& mesh, DelaunayMode mode) {
  DelaunayCheck out;
  const auto& pts = mesh.points();
  const Grid grid(pts);
  std::vector<std::array<Point2, 2>> walls;
  if (mode == DelaunayMode::constrained)
    for (const auto& e : mesh.constrained_edges()) walls.push_back({pts[e[0]], pts[e[1]]});

  auto hidden = [&](Point2 v, const std::array<Point2, 3>& c) {
    const Point2 g{(c[0].x + c[1].x + c[2].x) / 3.0, (c[0].y + c[1].y + c[2].y) / 3.0};
    std::array<Point2, 4> probes{g, g, g, g};
    for (int i = 0; i < 3; ++i) probes[i + 1] = midpoint(c[i], midpoint(c[(i + 1) % 3], c[(i + 2) % 3]));
    for (Point2 pr : probes) {
      bool blocked = false;
      for (const auto& w : walls) {
        if (orient2d(w[0], w[1], v) * orient2d(w[0], w[1], pr) < 0 &&
            orient2d(v, pr, w[0]) * orient2d(v, pr, w[1]) < 0) {
          blocked = true;
          break;
        }
      }
      if (!blocked) return false;
    }
    return true;
  };

  for (TriangleId t : mesh.domain_triangles()) {
    const auto c = mesh.corners(t);
    const auto& tv = mesh.vertices(t);
    const Circle cc = circumcircle(c[0], c[1], c[2]);
    const double reach = cc.radius * (1.0 + 1e-6) + 1e-300;
    grid.near(cc.center, reach, [&](VertexId v) {
      if (v == tv[0] || v == tv[1] || v == tv[2]) return;
      if (squared_distance(pts[v], cc.center) > reach * reach) return;
      if (incircle(c[0], c[1], c[2], pts[v]) <= 0) return;
      if (mode == DelaunayMode::constrained && hidden(pts[v], c)) return;
      ++out.violations;
    });
  }
  out.ok = out.violations == 0;
  return out;
}

bool is_delaunay(const Mesh& mesh, DelaunayMode mode) { return check_delaunay(mesh, mode).ok; }

bool pslg_recovered(const Mesh& mesh, const Pslg& refined) {
  for (const auto& s : refined.segments)
    if (!mesh.has_edge(static_cast<VertexId>(s.a), static_cast<VertexId>(s.b))) return false;
  return true;
}

}  // namespace frontmesh
