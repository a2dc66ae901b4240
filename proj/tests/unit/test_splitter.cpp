#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "frontmesh/errors.hpp"
#include "frontmesh/lfs.hpp"
#include "frontmesh/splitter.hpp"

using namespace frontmesh;
using frontmesh::testing::data_path;

namespace {

const double kLn2 = std::log(2.0);

Pslg isolated(double len) {
  Pslg g;
  g.add_vertex({1.0, -2.0});
  g.add_vertex({1.0 + len * 0.6, -2.0 + len * 0.8});
  g.add_segment(0, 1);
  return g;
}

std::vector<MappingFunction> maps_of(const std::vector<FeatureSizeFunction>& sizes) {
  std::vector<MappingFunction> maps;
  for (const auto& f : sizes) maps.push_back(solve_mapping(f));
  return maps;
}

}  // namespace

TEST(Mapping, IsolatedSegmentClosedForm) {
  for (double len : {1e-3, 0.7, 1.0, 42.0}) {
    const auto sizes = feature_sizes(isolated(len));
    const MappingFunction m = solve_mapping(sizes[0]);
    EXPECT_NEAR(reference_length(m), 2 * kLn2, 1e-9);
    // First half solves M' = len - M, so M = len (1 - e^{-t}).
    for (double t : {0.1, 0.3, 0.6}) EXPECT_NEAR(m(t), len * (1 - std::exp(-t)), 1e-12 * len);
    EXPECT_NEAR(m(m.t_star()), len, 1e-12 * len);
  }
}

TEST(Mapping, InverseRoundTrip) {
  const Pslg g = read_poly_file(data_path("square_hole.poly"));
  for (const auto& m : maps_of(feature_sizes(g))) {
    for (int i = 0; i <= 50; ++i) {
      const double t = m.t_star() * i / 50.0;
      EXPECT_NEAR(m.inverse(m(t)), t, 1e-9);
    }
  }
}

TEST(Mapping, OdeResidualAndContinuity) {
  std::vector<Pslg> corpus;
  for (const char* n : {"square.poly", "square_hole.poly", "wedge20.poly", "lshape.poly"})
    corpus.push_back(read_poly_file(data_path(n)));
  for (std::uint64_t s = 1; s <= 5; ++s) corpus.push_back(frontmesh::testing::random_holed_polygon(s));
  for (const auto& g : corpus) {
    const auto sizes = feature_sizes(g);
    const auto maps = maps_of(sizes);
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const auto& ps = maps[k].pieces();
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i + 1 < ps.size()) {
          EXPECT_NEAR(ps[i].value(ps[i].t_hi - ps[i].t_lo), ps[i + 1].x_lo, 1e-12 * sizes[k].length());
        }
        for (int j = 0; j < 100; ++j) {
          const double tau = (ps[i].t_hi - ps[i].t_lo) * (j + 0.5) / 100.0;
          const double x = ps[i].value(tau);
          const double f = eval_form(ps[i].feature, x);
          ASSERT_LE(std::fabs(ps[i].slope(tau) - f), 1e-8 * f);
        }
      }
    }
  }
}

TEST(Bounds, HandEvaluatedAnchors) {
  const SplitBounds b = bounds_for(10, 2 * kLn2);
  EXPECT_NEAR(b.a_star, 5.492128, 1e-5);
  EXPECT_NEAR(b.b_star, 8.213475, 1e-5);
  EXPECT_NEAR(b.ratio, 1.4955, 1e-4);
  const SplitBounds b4 = bounds_for(4, 2 * kLn2);
  EXPECT_NEAR(b4.a_star, 1.16404, 1e-5);
  EXPECT_NEAR(b4.b_star, 3.88539, 1e-5);
  EXPECT_THROW(bounds_for(2, 2 * kLn2), ConfigError);
  EXPECT_THROW(bounds_for(1, 2 * kLn2), ConfigError);
}

TEST(Conditions, HandEvaluatedRequiredAStar) {
  // alpha/(alpha-1) at 20 degrees is 3.16497.
  EXPECT_NEAR(required_astar(radians(20), DelaunayMode::truly), 20.7807, 1e-3);
  EXPECT_NEAR(required_astar(radians(20), DelaunayMode::constrained), 10.1623, 1e-3);
  EXPECT_LT(required_astar(radians(20), DelaunayMode::constrained), required_astar(radians(20), DelaunayMode::truly));
  EXPECT_THROW(required_astar(radians(30), DelaunayMode::truly), ConfigError);
  EXPECT_THROW(check_theta(radians(30)), ConfigError);
  EXPECT_THROW(check_theta(0.0), ConfigError);
  EXPECT_NO_THROW(check_theta(radians(29.9)));
}

TEST(Conditions, ChooseNStarIsMinimal) {
  const auto maps = maps_of(feature_sizes(isolated(3.0)));
  for (auto mode : {DelaunayMode::truly, DelaunayMode::constrained}) {
    for (double deg : {15.0, 20.0, 25.0, 28.0}) {
      const SplitBounds b = choose_nstar(maps, radians(deg), mode);
      EXPECT_GE(b.a_star, b.required_a_star);
      EXPECT_LT(bounds_for(b.n_star - 1, b.t_min).a_star, b.required_a_star);
      EXPECT_TRUE(b.conditions_satisfied);
    }
  }
  EXPECT_EQ(choose_nstar(maps, radians(20), DelaunayMode::truly).n_star, 32);
  const SplitBounds forced = choose_nstar(maps, radians(20), DelaunayMode::truly, 10);
  EXPECT_EQ(forced.n_star, 10);
  EXPECT_FALSE(forced.conditions_satisfied);
}

TEST(Split, IsolatedSegmentWithFourPieces) {
  const double len = 2.5;
  const Pslg g = isolated(len);
  const auto sizes = feature_sizes(g);
  const auto maps = maps_of(sizes);
  const SplitResult r = split(g, bounds_for(4, maps[0].t_star()), sizes, maps);
  ASSERT_EQ(r.segments[0].pieces, 4);
  ASSERT_EQ(r.segments[0].params.size(), 3u);
  const double want[] = {1 - 1 / std::sqrt(2.0), 0.5, 1 / std::sqrt(2.0)};
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(r.segments[0].params[j], want[j] * len, 1e-9 * len);
  EXPECT_EQ(r.refined.segments.size(), 4u);
  EXPECT_EQ(r.refined.vertices.size(), 5u);
  EXPECT_EQ(r.segments[0].chain.front(), 0u);
  EXPECT_EQ(r.segments[0].chain.back(), 1u);
}

TEST(Split, PieceCountsFollowFloorRule) {
  const Pslg g = read_poly_file(data_path("square_hole.poly"));
  const auto sizes = feature_sizes(g);
  const auto maps = maps_of(sizes);
  const SplitBounds b = choose_nstar(maps, radians(25), DelaunayMode::constrained);
  const SplitResult r = split(g, b, sizes, maps);
  std::size_t subsegs = 0;
  for (std::size_t s = 0; s < g.segments.size(); ++s) {
    const int want = std::max(2, static_cast<int>(std::floor(b.n_star * maps[s].t_star() / b.t_min + 1e-9)));
    EXPECT_EQ(r.segments[s].pieces, want);
    subsegs += want;
    const auto& p = r.segments[s].params;
    for (std::size_t j = 1; j < p.size(); ++j) EXPECT_LT(p[j - 1], p[j]);
  }
  EXPECT_EQ(r.refined.segments.size(), subsegs);
  EXPECT_EQ(r.subsegment_parent.size(), subsegs);
  EXPECT_TRUE(validate(r.refined).empty());
}

TEST(Split, SubsegmentsObeyBoundLaw) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Pslg g = frontmesh::testing::random_holed_polygon(seed);
    const auto sizes = feature_sizes(g);
    const auto maps = maps_of(sizes);
    const SplitBounds b = choose_nstar(maps, radians(20), DelaunayMode::constrained);
    const SplitResult r = split(g, b, sizes, maps);
    for (std::size_t k = 0; k < r.refined.segments.size(); ++k) {
      const auto& sub = r.refined.segments[k];
      const std::size_t parent = r.subsegment_parent[k];
      const double l = r.refined.length(k);
      for (std::size_t v : {sub.a, sub.b}) {
        const double ratio = lfs_on_segment_oracle(g, parent, r.refined.vertices[v]) / l;
        EXPECT_GE(ratio, b.a_star - 1e-6 * b.b_star);
        EXPECT_LE(ratio, b.b_star + 1e-6 * b.b_star);
      }
    }
  }
}
