#pragma once

#include <array>
#include <cmath>

namespace frontmesh {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline double squared_distance(Point2 a, Point2 b) {
  const Point2 d = a - b;
  return dot(d, d);
}
inline Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

struct Circle {
  Point2 center;
  double radius = 0.0;
};

// Exact sign predicates. Arguments are taken as exact binary64 values.
// +1 when c lies left of the directed line a->b.
int orient2d(Point2 a, Point2 b, Point2 c);
// +1 when d lies strictly inside the circle through the counterclockwise a, b, c.
int incircle(Point2 a, Point2 b, Point2 c, Point2 d);
// Sign of (a - p).(b - p); negative means p sees ab at an obtuse angle.
int dot_sign(Point2 p, Point2 a, Point2 b);

// True when p lies in the open segment ab (exact).
bool strictly_between(Point2 a, Point2 b, Point2 p);
// Closed segments ab and cd share at least one point (exact).
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);
// Interiors cross at a single point not at any endpoint (exact).
bool segments_cross_properly(Point2 a, Point2 b, Point2 c, Point2 d);

// Throws DegenerateError on collinear input.
Circle circumcircle(Point2 a, Point2 b, Point2 c);

double point_segment_distance(Point2 p, Point2 a, Point2 b);

// Interior angles at a, b, c in radians.
std::array<double, 3> angles(Point2 a, Point2 b, Point2 c);
double min_angle(Point2 a, Point2 b, Point2 c);
double max_angle(Point2 a, Point2 b, Point2 c);
double radius_edge_ratio(Point2 a, Point2 b, Point2 c);

inline constexpr double kPi = 3.14159265358979323846;
inline double degrees(double rad) { return rad * 180.0 / kPi; }
inline double radians(double deg) { return deg * kPi / 180.0; }

}  // namespace frontmesh
