#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "frontmesh/lfs.hpp"
#include "frontmesh/pslg.hpp"

namespace frontmesh {

enum class DelaunayMode { truly, constrained };

// Closed-form solutions of M' = F(M) on one feature-size piece. All forms use
// the local time tau = t - t_lo of their piece.
struct ExponentialForm {  // y = b/a + c e^{-a tau}
  double a = 0.0, b = 0.0, c = 0.0;
};
struct AffineForm {  // y = b tau + c
  double b = 0.0, c = 0.0;
};
struct HyperbolicForm {  // y = c1 e^tau + c2 e^{-tau} - a
  double a = 0.0, c1 = 0.0, c2 = 0.0;
};

struct MappingPiece {
  double t_lo = 0.0, t_hi = 0.0;
  double x_lo = 0.0, x_hi = 0.0;
  std::variant<ExponentialForm, AffineForm, HyperbolicForm> form;
  PieceForm feature;  // F on [x_lo, x_hi]
  double f_lo = 0.0;  // F(x_lo)

  double value(double tau) const;
  double slope(double tau) const;
  double local_time(double x) const;  // inverse of value()
};

class MappingFunction {
 public:
  MappingFunction() = default;
  explicit MappingFunction(const FeatureSizeFunction& f);

  double operator()(double t) const;
  double derivative(double t) const;
  double inverse(double x) const;
  double t_star() const { return t_star_; }
  double length() const { return length_; }
  const std::vector<MappingPiece>& pieces() const { return pieces_; }

 private:
  const MappingPiece& piece_at(double t) const;

  std::vector<MappingPiece> pieces_;
  double t_star_ = 0.0;
  double length_ = 0.0;
};

MappingFunction solve_mapping(const FeatureSizeFunction& f);
double reference_length(const MappingFunction& m);

struct SplitBounds {
  int n_star = 0;
  double t_min = 0.0;
  double a_star = 0.0;
  double b_star = 0.0;
  double ratio = 0.0;  // B* / A*
  double required_a_star = 0.0;
  bool conditions_satisfied = true;
};

// Throws ConfigError when the resulting lower bound is not positive.
SplitBounds bounds_for(int n_star, double t_min);

double alpha_of(double theta);  // 1 / (2 sin theta)
void check_theta(double theta);  // throws ConfigError unless 0 < theta < pi/6
// Smallest A* meeting every termination condition of the mode, assuming the
// worst-case gap B* = A* + 1/ln 2 + 2.
double required_astar(double theta, DelaunayMode mode);
// Checks the same conditions against realised bounds.
bool conditions_hold(double a_star, double b_star, double theta, DelaunayMode mode);

SplitBounds choose_nstar(const std::vector<MappingFunction>& maps, double theta, DelaunayMode mode,
                         std::optional<int> override_n = std::nullopt);

enum class VertexOrigin : unsigned char { input, split, steiner };

struct SplitVertexInfo {
  VertexOrigin origin = VertexOrigin::input;
  std::vector<std::size_t> segments;  // hosting input segments
  double param = 0.0;                 // position along the host segment (split vertices)
  double lfs = 0.0;                   // feature size cached at split time
};

struct SegmentSplit {
  int pieces = 0;  // n_i
  double t_star = 0.0;
  std::vector<double> params;             // interior split positions along the segment
  std::vector<std::size_t> chain;         // vertex ids from endpoint a to b
};

struct SplitResult {
  Pslg refined;  // input vertices first, then split vertices; segments are subsegments
  SplitBounds bounds;
  std::vector<SegmentSplit> segments;
  std::vector<SplitVertexInfo> vertices;
  std::vector<std::size_t> subsegment_parent;
};

SplitResult split(const Pslg& pslg, const SplitBounds& bounds, const std::vector<FeatureSizeFunction>& sizes,
                  const std::vector<MappingFunction>& maps);

}  // namespace frontmesh
