#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "frontmesh/geometry.hpp"

namespace frontmesh {

struct Segment {
  std::size_t a = 0;
  std::size_t b = 0;
  int marker = 0;
};

struct Pslg {
  std::vector<Point2> vertices;
  std::vector<int> vertex_markers;  // same length as vertices
  std::vector<Segment> segments;
  std::vector<Point2> holes;
  int first_index = 1;  // index base used by the source file

  std::size_t add_vertex(Point2 p, int marker = 0);
  std::size_t add_segment(std::size_t a, std::size_t b, int marker = 0);
  bool adjacent(std::size_t s1, std::size_t s2) const;
  bool has_endpoint(std::size_t s, std::size_t v) const;
  double length(std::size_t s) const;
  // Segments incident to each vertex, in segment order.
  std::vector<std::vector<std::size_t>> incidence() const;
};

enum class ViolationKind {
  NoSegments,
  NonFiniteVertex,
  DuplicateVertex,
  IndexOutOfRange,
  ZeroLengthSegment,
  DuplicateSegment,
  CollinearOverlap,
  VertexOnSegment,
  ProperIntersection,
};

struct Violation {
  ViolationKind kind;
  std::size_t first = 0;
  std::size_t second = 0;

  std::string message() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Triangle-style .poly text. Throws ParseError carrying the offending line.
Pslg parse_poly(std::istream& in);
Pslg parse_poly_string(const std::string& text);
Pslg read_poly_file(const std::string& path);

std::vector<Violation> validate(const Pslg& pslg);
// Throws ValidationError listing every violation.
void require_valid(const Pslg& pslg);

// Angle in (0, pi] between two segments sharing exactly one endpoint.
double angle_between_adjacent(const Pslg& pslg, std::size_t s1, std::size_t s2);

struct SmallAngleRecord {
  std::size_t apex = 0;
  std::pair<std::size_t, std::size_t> segments;  // first < second
  double angle = 0.0;
};

// Adjacent segment pairs whose angle is at most arccos(1 / (2R)).
std::vector<SmallAngleRecord> classify_small_angles(const Pslg& pslg, double ratio);
double small_angle_threshold(double ratio);

}  // namespace frontmesh
