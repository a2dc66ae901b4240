#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "frontmesh/errors.hpp"
#include "frontmesh/pipeline.hpp"
#include "frontmesh/refine.hpp"

using namespace frontmesh;
using frontmesh::testing::data_path;

TEST(Offcenter, UnitEdgeAnchor) {
  const Point2 c = offcenter({0, 0}, {1, 0}, {0.5, 3}, radians(30));
  EXPECT_NEAR(c.x, 0.5, 1e-12);
  EXPECT_NEAR(c.y, 1.8660254037844386, 1e-12);
  EXPECT_NEAR(distance(c, {0, 0}), 1.9318516525781366, 1e-12);
  const Point2 below = offcenter({0, 0}, {1, 0}, {0.5, -3}, radians(30));
  EXPECT_NEAR(below.y, -1.8660254037844386, 1e-12);
}

TEST(Offcenter, SubtendsTheta) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3, 3), th(5, 29.9);
  for (int k = 0; k < 500; ++k) {
    const Point2 p{u(rng), u(rng)}, q{u(rng), u(rng)}, h{u(rng), u(rng)};
    if (std::fabs(orient2d(p, q, h)) == 0 || distance(p, q) < 1e-3) continue;
    const double theta = radians(th(rng));
    const Point2 c = offcenter(p, q, h, theta);
    EXPECT_NEAR(angles(c, p, q)[0], theta, 1e-9);
    EXPECT_EQ(orient2d(p, q, c), orient2d(p, q, h));
  }
}

TEST(SteinerPoint, PicksNearerCandidate) {
  const double theta = radians(25);
  const SteinerChoice skinny = steiner_point({0, 0}, {1, 0}, {0.5, 5}, theta);
  EXPECT_TRUE(skinny.used_offcenter);
  EXPECT_NEAR(skinny.point.y, 0.5 / std::tan(theta / 2), 1e-12);
  const double s3 = std::sqrt(3.0);
  const SteinerChoice fat = steiner_point({0, 0}, {1, 0}, {0.5, s3 / 2 + 1e-3}, theta);
  EXPECT_FALSE(fat.used_offcenter);
}

TEST(Skinny, StrictThreshold) {
  const double t = std::atan(0.2);
  EXPECT_FALSE(is_skinny({0, 0}, {1, 0}, {0.5, 0.1}, t));
  EXPECT_TRUE(is_skinny({0, 0}, {1, 0}, {0.5, 0.1}, t + 1e-9));
}

TEST(Encroachment, AcrossAndDiametral) {
  const std::vector<std::array<Point2, 2>> subs{{Point2{0, 0}, Point2{1, 0}}};
  const std::array<Point2, 3> tri{Point2{0.4, 0.5}, Point2{0.6, 0.5}, Point2{0.5, 0.7}};
  EXPECT_TRUE(check_encroachment({0.5, -0.2}, tri, subs, DelaunayMode::constrained));
  EXPECT_TRUE(check_encroachment({0.5, 0.3}, tri, subs, DelaunayMode::truly));
  EXPECT_FALSE(check_encroachment({0.5, 0.3}, tri, subs, DelaunayMode::constrained));
  EXPECT_FALSE(check_encroachment({0.5, 0.6}, tri, subs, DelaunayMode::truly));
  EXPECT_FALSE(check_encroachment({0.5, 0.5}, tri, subs, DelaunayMode::truly));  // on the circle
}

TEST(Refine, CorpusMeetsTargets) {
  for (const char* f : {"square.poly", "square_hole.poly", "lshape.poly"}) {
    for (auto mode : {DelaunayMode::truly, DelaunayMode::constrained}) {
      PipelineOptions opt;
      opt.theta_deg = 25;
      opt.mode = mode;
      const auto r = run_pipeline(read_poly_file(data_path(f)), opt);
      const auto& q = r.report;
      EXPECT_TRUE(q.passed()) << f;
      EXPECT_EQ(r.stats.encroachment_events, 0u) << f;
      EXPECT_GE(q.min_angle, radians(25) - 1e-12) << f;
      EXPECT_NO_THROW(r.prepared.mesh.audit());
      EXPECT_EQ(r.stats.insertions + r.prepared.split.refined.vertices.size(), r.prepared.mesh.vertex_count());
    }
  }
}

TEST(Refine, SkipsOnlyAcrossSmallAngles) {
  PipelineOptions opt;
  opt.theta_deg = 25;
  const auto r = run_pipeline(read_poly_file(data_path("wedge20.poly")), opt);
  ASSERT_EQ(r.small_angles.size(), 1u);
  EXPECT_GT(r.report.skipped_triangles, 0u);
  EXPECT_GE(r.report.min_angle_excluding_skipped, radians(25) - 1e-12);
  const Mesh& m = r.prepared.mesh;
  const VertexContext ctx{&r.prepared.split.vertices, &r.small_angles, r.prepared.split.bounds.b_star};
  for (const auto& t : r.skipped_triangles()) {
    EXPECT_TRUE(is_skinny(m.point(t[0]), m.point(t[1]), m.point(t[2]), radians(25)));
    bool across = false;
    for (int i = 0; i < 3; ++i) across = across || across_small_angle(t[i], t[(i + 1) % 3], m, ctx);
    EXPECT_TRUE(across);
  }
}

TEST(Refine, InsertionCapRaises) {
  PipelineOptions opt;
  opt.theta_deg = 25;
  opt.max_insertions = 5;
  try {
    run_pipeline(read_poly_file(data_path("square_hole.poly")), opt);
    FAIL();
  } catch (const NonTerminationError& e) {
    EXPECT_EQ(e.stats().insertions, 5u);
  }
}

TEST(Refine, TrulyRecoveryOnWedge) {
  const Pslg g = read_poly_file(data_path("wedge20.poly"));
  const auto sizes = feature_sizes(g);
  std::vector<MappingFunction> maps;
  for (const auto& f : sizes) maps.push_back(solve_mapping(f));
  const PreparedMesh p = prepare_mesh(g, sizes, maps, radians(25), DelaunayMode::truly, 4);
  EXPECT_TRUE(p.recovered);
  EXPECT_TRUE(pslg_recovered(p.mesh, p.split.refined));
  EXPECT_LE(p.doublings, 20);
  EXPECT_EQ(p.split.bounds.n_star, 4 << p.doublings);
}
