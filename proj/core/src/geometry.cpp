#include "frontmesh/geometry.hpp"

#include <algorithm>

#include "frontmesh/errors.hpp"

namespace frontmesh {

bool strictly_between(Point2 a, Point2 b, Point2 p) {
  if (orient2d(a, b, p) != 0) return false;
  return dot_sign(p, a, b) < 0;
}

namespace {
bool on_closed_segment(Point2 a, Point2 b, Point2 p) {
  if (orient2d(a, b, p) != 0) return false;
  return dot_sign(p, a, b) <= 0;
}
}  // namespace

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  const int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_closed_segment(a, b, c) || on_closed_segment(a, b, d) || on_closed_segment(c, d, a) ||
         on_closed_segment(c, d, b);
}

bool segments_cross_properly(Point2 a, Point2 b, Point2 c, Point2 d) {
  return orient2d(a, b, c) * orient2d(a, b, d) < 0 && orient2d(c, d, a) * orient2d(c, d, b) < 0;
}

Circle circumcircle(Point2 a, Point2 b, Point2 c) {
  if (orient2d(a, b, c) == 0) throw DegenerateError("circumcircle of collinear points");
  const Point2 ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
  const Point2 off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  return {a + off, norm(off)};
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

std::array<double, 3> angles(Point2 a, Point2 b, Point2 c) {
  auto at = [](Point2 o, Point2 u, Point2 v) {
    const Point2 du = u - o, dv = v - o;
    return std::atan2(std::fabs(cross(du, dv)), dot(du, dv));
  };
  return {at(a, b, c), at(b, c, a), at(c, a, b)};
}

double min_angle(Point2 a, Point2 b, Point2 c) {
  const auto t = angles(a, b, c);
  return std::min({t[0], t[1], t[2]});
}

double max_angle(Point2 a, Point2 b, Point2 c) {
  const auto t = angles(a, b, c);
  return std::max({t[0], t[1], t[2]});
}

double radius_edge_ratio(Point2 a, Point2 b, Point2 c) {
  const double la = distance(b, c), lb = distance(c, a), lc = distance(a, b);
  const double twice_area = std::fabs(cross(b - a, c - a));
  if (twice_area == 0.0) throw DegenerateError("radius-edge ratio of a degenerate triangle");
  const double r = la * lb * lc / (2.0 * twice_area);
  return r / std::min({la, lb, lc});
}

}  // namespace frontmesh
