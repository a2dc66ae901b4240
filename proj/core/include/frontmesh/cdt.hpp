#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frontmesh/geometry.hpp"
#include "frontmesh/pslg.hpp"
#include "frontmesh/splitter.hpp"

namespace frontmesh {

using VertexId = std::uint32_t;
using TriangleId = std::uint32_t;
inline constexpr VertexId kGhost = 0xffffffffu;
inline constexpr TriangleId kNoTriangle = 0xffffffffu;

struct EdgeRef {
  TriangleId tri = kNoTriangle;
  int edge = 0;  // edge i is opposite vertex i
};

struct InsertResult {
  VertexId vertex = 0;
  std::vector<TriangleId> created;  // real and ghost triangles around the new vertex
};

// Incremental (constrained) Delaunay triangulation with ghost triangles on
// the convex hull. Triangle slots are recycled; generation() changes
// whenever a slot is rewritten.
class Mesh {
 public:
  // Delaunay triangulation of the points; vertex ids equal point indices.
  static Mesh triangulate(std::span<const Point2> points, std::span<const VertexOrigin> origins = {});

  VertexId insert_vertex(Point2 p, VertexOrigin origin = VertexOrigin::steiner, TriangleId hint = kNoTriangle);
  InsertResult insert_vertex_detailed(Point2 p, VertexOrigin origin, TriangleId hint);
  void insert_constraint(VertexId a, VertexId b);

  std::size_t vertex_count() const { return points_.size(); }
  Point2 point(VertexId v) const { return points_[v]; }
  VertexOrigin origin(VertexId v) const { return origins_[v]; }
  const std::vector<Point2>& points() const { return points_; }

  std::size_t slot_count() const { return tris_.size(); }
  bool alive(TriangleId t) const { return t < tris_.size() && tris_[t].alive; }
  bool is_ghost(TriangleId t) const { return tris_[t].v[2] == kGhost; }
  const std::array<VertexId, 3>& vertices(TriangleId t) const { return tris_[t].v; }
  TriangleId neighbor(TriangleId t, int i) const { return tris_[t].n[i]; }
  bool constrained(TriangleId t, int i) const { return (tris_[t].constrained >> i) & 1u; }
  std::uint32_t generation(TriangleId t) const { return tris_[t].generation; }
  bool exterior(TriangleId t) const { return tris_[t].exterior; }
  std::array<Point2, 3> corners(TriangleId t) const;

  // Live real triangles in slot order.
  std::vector<TriangleId> triangles() const;
  // Live real triangles inside the domain.
  std::vector<TriangleId> domain_triangles() const;
  std::size_t triangle_count() const;

  std::optional<EdgeRef> find_edge(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }
  bool is_constrained_edge(VertexId a, VertexId b) const;
  std::vector<std::array<VertexId, 2>> constrained_edges() const;

  // Triangle containing p (closed), or a ghost if p is outside the hull.
  TriangleId locate(Point2 p, TriangleId hint = kNoTriangle) const;

  // Flood fill from the hull and from hole seeds, stopped by constrained edges.
  void mark_exterior(std::span<const Point2> holes);

  // Throws MeshError describing the first broken invariant.
  void audit() const;

 private:
  struct Tri {
    std::array<VertexId, 3> v{};
    std::array<TriangleId, 3> n{kNoTriangle, kNoTriangle, kNoTriangle};
    std::uint8_t constrained = 0;
    bool alive = false;
    bool exterior = false;
    std::uint32_t generation = 0;
  };

  struct Boundary {
    VertexId u, w;
    TriangleId outside;
    int outside_edge;
    bool constrained;
  };

  bool in_circle(TriangleId t, Point2 p) const;
  TriangleId new_triangle(const std::array<VertexId, 3>& v, bool exterior);
  void kill(TriangleId t);
  std::vector<TriangleId> replace(const std::vector<TriangleId>& cavity,
                                  const std::vector<std::array<VertexId, 3>>& fresh,
                                  std::optional<std::array<VertexId, 2>> constrained_inner);
  InsertResult insert_existing(VertexId id, TriangleId hint);
  void break_cocircular_ties();
  int edge_index(TriangleId t, VertexId a, VertexId b) const;

  std::vector<Point2> points_;
  std::vector<VertexOrigin> origins_;
  std::vector<TriangleId> vertex_tri_;
  std::vector<Tri> tris_;
  std::vector<TriangleId> free_;
  mutable TriangleId last_ = kNoTriangle;
  mutable std::uint64_t rng_ = 0x9e3779b97f4a7c15ull;
};

// Every (triangle, vertex) pair over domain triangles: no vertex strictly
// inside a circumcircle; in constrained mode unless every probe point of
// the triangle is hidden from the vertex by a constrained edge.
struct DelaunayCheck {
  bool ok = true;
  std::size_t violations = 0;
};
DelaunayCheck check_delaunay(const Mesh& mesh, DelaunayMode mode);
bool is_delaunay(const Mesh& mesh, DelaunayMode mode);

// Every subsegment of the refined PSLG is an edge of the mesh.
bool pslg_recovered(const Mesh& mesh, const Pslg& refined);

}  // namespace frontmesh
