#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "frontmesh/geometry.hpp"
#include "frontmesh/pslg.hpp"

namespace frontmesh {

// Local frame of a segment: x runs from endpoint a (x = 0) to b (x = length).
struct SegmentFrame {
  Point2 origin;
  Point2 dir;  // unit
  double length = 0.0;

  static SegmentFrame of(const Pslg& pslg, std::size_t s);
  Point2 at(double x) const { return origin + x * dir; }
};

// sqrt((x - a)^2 + b^2): distance to a point feature at local coordinates (a, b).
struct PointDistance {
  double a = 0.0;
  double b = 0.0;
};
// c0 + c1 * x: distance to a nonadjacent segment inside its perpendicular band.
struct LineDistance {
  double c0 = 0.0;
  double c1 = 0.0;
};
// max(length - x, x)
struct FarthestEndpoint {
  double length = 0.0;
};

struct DistanceFunction {
  std::variant<PointDistance, LineDistance, FarthestEndpoint> kind;
  double lo = 0.0;
  double hi = 0.0;

  double operator()(double x) const;
};

// b - a * x
struct LinearForm {
  double b = 0.0;
  double a = 0.0;
};
// sqrt(x^2 + 2 a x + b), kept alongside its vertex form sqrt((x + a)^2 + h^2)
struct SqrtQuadraticForm {
  double a = 0.0;
  double b = 0.0;
  double h = 0.0;
};

using PieceForm = std::variant<LinearForm, SqrtQuadraticForm>;
double eval_form(const PieceForm& f, double x);

struct FeaturePiece {
  double lo = 0.0;
  double hi = 0.0;
  PieceForm form;

  double operator()(double x) const { return eval_form(form, x); }
};

class FeatureSizeFunction {
 public:
  FeatureSizeFunction() = default;
  FeatureSizeFunction(double length, std::vector<FeaturePiece> pieces);

  // Throws std::out_of_range outside [0, length].
  double operator()(double x) const;
  const FeaturePiece& piece_at(double x) const;
  const std::vector<FeaturePiece>& pieces() const { return pieces_; }
  double length() const { return length_; }
  std::vector<double> breakpoints() const;

 private:
  double length_ = 0.0;
  std::vector<FeaturePiece> pieces_;
};

std::vector<DistanceFunction> distance_functions_for(const Pslg& pslg, std::size_t s);
// Throws DegenerateError if the envelope reaches zero.
FeatureSizeFunction lower_envelope(const std::vector<DistanceFunction>& funcs, double length);
FeatureSizeFunction feature_size_for(const Pslg& pslg, std::size_t s);
// One function per segment; threads > 1 spreads segments over worker threads.
std::vector<FeatureSizeFunction> feature_sizes(const Pslg& pslg, unsigned threads = 1);

double lfs_eval(const FeatureSizeFunction& f, double x);

// Brute force: smallest radius of a disk centred at p touching two
// nonadjacent features (vertices and segments).
double lfs_oracle(const Pslg& pslg, Point2 p);
// Brute force specialisation for p on segment s: nearest feature not
// adjacent to s, capped by the distance to the farther endpoint of s.
double lfs_on_segment_oracle(const Pslg& pslg, std::size_t s, Point2 p);

}  // namespace frontmesh
