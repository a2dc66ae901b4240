#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "frontmesh/errors.hpp"
#include "frontmesh/pslg.hpp"

using namespace frontmesh;
using frontmesh::testing::data_path;

namespace {

const char* kSquare = R"(# square
4 2 0 1
1 0 0 1
2 1 0 1
3 1 1 1
4 0 1 1
4 1
1 1 2 1
2 2 3 1
3 3 4 1
4 4 1 1
0
)";

std::vector<ViolationKind> kinds(const Pslg& g) {
  std::vector<ViolationKind> out;
  for (const auto& v : validate(g)) out.push_back(v.kind);
  return out;
}

}  // namespace

TEST(Poly, ParsesSquare) {
  const Pslg g = parse_poly_string(kSquare);
  ASSERT_EQ(g.vertices.size(), 4u);
  ASSERT_EQ(g.segments.size(), 4u);
  EXPECT_EQ(g.first_index, 1);
  EXPECT_EQ(g.segments[3].a, 3u);
  EXPECT_EQ(g.segments[3].b, 0u);
  EXPECT_EQ(g.vertex_markers[2], 1);
  EXPECT_TRUE(g.holes.empty());
  EXPECT_TRUE(validate(g).empty());
}

TEST(Poly, ZeroBasedAndHoles) {
  const Pslg g = read_poly_file(data_path("square_hole.poly"));
  EXPECT_EQ(g.vertices.size(), 8u);
  ASSERT_EQ(g.holes.size(), 1u);
  EXPECT_EQ(g.holes[0], (Point2{0.5, 0.5}));
  const Pslg l = read_poly_file(data_path("lshape.poly"));
  EXPECT_EQ(l.first_index, 0);
  EXPECT_TRUE(validate(l).empty());
}

TEST(Poly, ErrorsCarryLineNumbers) {
  try {
    parse_poly_string("3 2 0 0\n1 0 0\n2 1 zero\n3 0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_poly_string("2 2 0 0\n1 0 0\n"), ParseError);
  EXPECT_THROW(parse_poly_string("2 2 0 0\n1 0 0\n1 1 0\n1 0\n1 1 2\n"), ParseError);
  EXPECT_THROW(parse_poly_string("2 2 0 0\n1 0 0\n2 1 0\n1 0\n1 1 7\n"), ParseError);
  EXPECT_THROW(read_poly_file("/nonexistent.poly"), Error);
}

TEST(Validate, EachViolationKind) {
  Pslg empty;
  empty.add_vertex({0, 0});
  EXPECT_EQ(kinds(empty), std::vector{ViolationKind::NoSegments});
  EXPECT_EQ(validate(empty)[0].message(), "PSLG must contain at least one segment");

  Pslg cross;
  cross.add_vertex({0, 0});
  cross.add_vertex({1, 1});
  cross.add_vertex({0, 1});
  cross.add_vertex({1, 0});
  cross.add_segment(0, 1);
  cross.add_segment(2, 3);
  EXPECT_EQ(kinds(cross), std::vector{ViolationKind::ProperIntersection});

  Pslg touch;
  touch.add_vertex({0, 0});
  touch.add_vertex({2, 0});
  touch.add_vertex({1, 0});
  touch.add_vertex({1, 1});
  touch.add_segment(0, 1);
  touch.add_segment(2, 3);
  EXPECT_EQ(kinds(touch), std::vector{ViolationKind::VertexOnSegment});

  Pslg overlap;
  overlap.add_vertex({0, 0});
  overlap.add_vertex({2, 0});
  overlap.add_vertex({1, 0});
  overlap.add_vertex({3, 0});
  overlap.add_segment(0, 1);
  overlap.add_segment(2, 3);
  const auto ok = kinds(overlap);
  EXPECT_NE(std::find(ok.begin(), ok.end(), ViolationKind::CollinearOverlap), ok.end());

  Pslg dup;
  dup.add_vertex({0, 0});
  dup.add_vertex({1, 0});
  dup.add_vertex({0, 0});
  dup.add_segment(0, 1);
  dup.add_segment(1, 0);
  dup.add_segment(1, 1);
  const auto dk = kinds(dup);
  for (auto k : {ViolationKind::DuplicateVertex, ViolationKind::DuplicateSegment, ViolationKind::ZeroLengthSegment})
    EXPECT_NE(std::find(dk.begin(), dk.end(), k), dk.end());

  Pslg bad;
  bad.add_vertex({0, 0});
  bad.add_vertex({NAN, 0});
  bad.segments.push_back({0, 5, 0});
  const auto bk = kinds(bad);
  EXPECT_NE(std::find(bk.begin(), bk.end(), ViolationKind::NonFiniteVertex), bk.end());
  EXPECT_NE(std::find(bk.begin(), bk.end(), ViolationKind::IndexOutOfRange), bk.end());
  EXPECT_THROW(require_valid(bad), ValidationError);
}

TEST(Validate, SharedEndpointsAreFine) {
  for (const char* f : {"square.poly", "square_hole.poly", "wedge20.poly", "lshape.poly"})
    EXPECT_TRUE(validate(read_poly_file(data_path(f))).empty()) << f;
}

TEST(SmallAngles, ThresholdAndClassification) {
  EXPECT_NEAR(degrees(small_angle_threshold(1.0)), 60.0, 1e-12);
  EXPECT_NEAR(degrees(small_angle_threshold(1.4955)), degrees(std::acos(1 / (2 * 1.4955))), 1e-12);
  EXPECT_THROW(small_angle_threshold(0.5), ConfigError);

  const Pslg w = read_poly_file(data_path("wedge20.poly"));
  const auto rec = classify_small_angles(w, 1.2);
  ASSERT_EQ(rec.size(), 1u);
  EXPECT_EQ(rec[0].apex, 0u);
  EXPECT_EQ(rec[0].segments, (std::pair<std::size_t, std::size_t>{0, 2}));
  EXPECT_NEAR(degrees(rec[0].angle), 20.0, 1e-12);
  EXPECT_TRUE(classify_small_angles(read_poly_file(data_path("square.poly")), 1.2).empty());
}

TEST(SmallAngles, AngleBetweenAdjacent) {
  const Pslg w = read_poly_file(data_path("wedge20.poly"));
  EXPECT_NEAR(degrees(angle_between_adjacent(w, 0, 1)), 80.0, 1e-9);
  EXPECT_NEAR(degrees(angle_between_adjacent(w, 1, 2)), 80.0, 1e-9);
}

TEST(RandomPolygons, AreValidWithObtuseCorners) {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const Pslg g = frontmesh::testing::random_holed_polygon(s);
    EXPECT_TRUE(validate(g).empty()) << s;
    EXPECT_GE(degrees(frontmesh::testing::min_corner_angle(g)), 90.0) << s;
  }
}
