#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "frontmesh/cdt.hpp"
#include "frontmesh/errors.hpp"

using namespace frontmesh;

namespace {

// Andrew's monotone chain, strictly convex vertices only.
std::size_t hull_size(std::vector<Point2> p) {
  std::sort(p.begin(), p.end(), lex_less);
  std::vector<Point2> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && orient2d(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient2d(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  return k - 1;
}

bool brute_delaunay(const Mesh& m) {
  for (TriangleId t : m.triangles()) {
    const auto c = m.corners(t);
    for (VertexId v = 0; v < m.vertex_count(); ++v)
      if (incircle(c[0], c[1], c[2], m.point(v)) > 0) return false;
  }
  return true;
}

double area(const Mesh& m, const std::vector<TriangleId>& ts) {
  double a = 0;
  for (TriangleId t : ts) {
    const auto c = m.corners(t);
    a += 0.5 * cross(c[1] - c[0], c[2] - c[0]);
  }
  return a;
}

std::vector<Point2> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Point2> p(n);
  for (auto& q : p) q = {u(rng), u(rng)};
  return p;
}

}  // namespace

TEST(Triangulate, RandomPointsAreDelaunayWithEulerCount) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto pts = random_points(300, seed);
    const Mesh m = Mesh::triangulate(pts);
    EXPECT_NO_THROW(m.audit());
    EXPECT_TRUE(brute_delaunay(m));
    EXPECT_EQ(m.triangle_count(), 2 * pts.size() - hull_size(pts) - 2);
    EXPECT_TRUE(is_delaunay(m, DelaunayMode::truly));
  }
}

TEST(Triangulate, CocircularGridIsDeterministic) {
  std::vector<Point2> pts;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) pts.push_back({i * 0.1, j * 0.1});
  const Mesh a = Mesh::triangulate(pts);
  const Mesh b = Mesh::triangulate(pts);
  EXPECT_NO_THROW(a.audit());
  EXPECT_TRUE(brute_delaunay(a));
  EXPECT_EQ(a.triangle_count(), 2u * 11u * 11u);
  ASSERT_EQ(a.slot_count(), b.slot_count());
  for (TriangleId t : a.triangles()) EXPECT_EQ(a.vertices(t), b.vertices(t));
  EXPECT_NEAR(area(a, a.triangles()), 1.21, 1e-12);
}

TEST(Triangulate, RejectsDegenerateInput) {
  const std::vector<Point2> dup{{0, 0}, {1, 0}, {0, 1}, {1, 0}};
  EXPECT_THROW(Mesh::triangulate(dup), MeshError);
  const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  EXPECT_THROW(Mesh::triangulate(line), DegenerateError);
}

TEST(Insert, IncrementalStaysDelaunay) {
  const auto pts = random_points(200, 17);
  Mesh m = Mesh::triangulate(std::vector<Point2>(pts.begin(), pts.begin() + 3));
  for (std::size_t i = 3; i < pts.size(); ++i) {
    const VertexId v = m.insert_vertex(pts[i]);
    EXPECT_EQ(v, i);
  }
  EXPECT_NO_THROW(m.audit());
  EXPECT_TRUE(brute_delaunay(m));
  EXPECT_THROW(m.insert_vertex(pts[7]), MeshError);
  EXPECT_NO_THROW(m.audit());
  // Outside the hull.
  m.insert_vertex({2.0, 2.0});
  EXPECT_NO_THROW(m.audit());
  EXPECT_TRUE(brute_delaunay(m));
}

TEST(Locate, FindsContainingTriangle) {
  const auto pts = random_points(100, 3);
  const Mesh m = Mesh::triangulate(pts);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.2, 0.8);
  for (int k = 0; k < 200; ++k) {
    const Point2 p{u(rng), u(rng)};
    const TriangleId t = m.locate(p);
    ASSERT_FALSE(m.is_ghost(t));
    const auto c = m.corners(t);
    EXPECT_GE(orient2d(c[0], c[1], p), 0);
    EXPECT_GE(orient2d(c[1], c[2], p), 0);
    EXPECT_GE(orient2d(c[2], c[0], p), 0);
  }
}

TEST(Constraints, RecoveredAndConstrainedDelaunay) {
  std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int i = 0; i < 60; ++i) pts.push_back({u(rng), u(rng)});
  pts.push_back({0.02, 0.5});
  pts.push_back({0.98, 0.51});
  pts.push_back({0.5, 0.02});
  Mesh m = Mesh::triangulate(pts);
  const VertexId a = static_cast<VertexId>(pts.size() - 3), b = a + 1;
  m.insert_constraint(a, b);
  m.insert_constraint(0, 1);
  EXPECT_NO_THROW(m.audit());
  EXPECT_TRUE(m.is_constrained_edge(a, b));
  EXPECT_TRUE(m.is_constrained_edge(1, 0));
  EXPECT_TRUE(is_delaunay(m, DelaunayMode::constrained));
  EXPECT_EQ(m.constrained_edges().size(), 2u);
  EXPECT_NEAR(area(m, m.triangles()), 1.0, 1e-12);
}

TEST(Constraints, CrossingConstraintIsRejected) {
  std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  Mesh m = Mesh::triangulate(pts);
  m.insert_constraint(0, 2);
  EXPECT_THROW(m.insert_constraint(1, 3), MeshError);
}

TEST(Exterior, HoleSeedsAndHull) {
  const Pslg g = read_poly_file(frontmesh::testing::data_path("square_hole.poly"));
  Mesh m = Mesh::triangulate(g.vertices);
  for (const auto& s : g.segments) m.insert_constraint(static_cast<VertexId>(s.a), static_cast<VertexId>(s.b));
  m.mark_exterior(g.holes);
  EXPECT_NEAR(area(m, m.domain_triangles()), 0.75, 1e-12);
  EXPECT_NEAR(area(m, m.triangles()), 1.0, 1e-12);
  Pslg refined = g;
  EXPECT_TRUE(pslg_recovered(m, refined));
  refined.add_vertex({0.5, 0.0});
  refined.add_segment(0, refined.vertices.size() - 1);
  EXPECT_FALSE(pslg_recovered(m, refined));
}

TEST(DelaunayCheck, DetectsForcedConstraint) {
  // A thin quad whose short diagonal is Delaunay; constrain the long one.
  std::vector<Point2> pts{{0, 0}, {1, -0.1}, {2, 0}, {1, 0.1}};
  Mesh m = Mesh::triangulate(pts);
  EXPECT_TRUE(m.has_edge(1, 3));
  m.insert_constraint(0, 2);
  EXPECT_TRUE(m.has_edge(0, 2));
  EXPECT_FALSE(is_delaunay(m, DelaunayMode::truly));
  EXPECT_TRUE(is_delaunay(m, DelaunayMode::constrained));
}
