#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frontmesh/cdt.hpp"
#include "frontmesh/pslg.hpp"
#include "frontmesh/refine.hpp"
#include "frontmesh/splitter.hpp"

namespace frontmesh {

double theorem1_bound(double b_star, double theta);
// Lower bound on the smallest angle of a triangle left across a small angle phi.
double small_angle_min_bound(double phi, double ratio);
double small_angle_max_bound(double phi);
// (min, max)
std::pair<double, double> small_angle_bounds(double phi, double ratio);

struct SmallAngleReport {
  std::size_t apex = 0;
  std::pair<std::size_t, std::size_t> segments;
  double phi = 0.0;
  double min_bound = 0.0;
  double max_bound = 0.0;
  std::size_t skipped_triangles = 0;
  std::optional<double> realized_min_angle;  // over skipped triangles
  std::optional<double> realized_max_angle;  // over triangles on skipped edges
};

struct QualityReport {
  std::string mode;
  double theta = 0.0;
  int n_star = 0;
  double a_star = 0.0;
  double b_star = 0.0;
  double ratio = 0.0;
  bool conditions_satisfied = true;
  std::size_t vertex_count = 0;
  std::size_t triangle_count = 0;
  std::size_t skipped_triangles = 0;
  double min_angle = 0.0;
  double min_angle_excluding_skipped = 0.0;
  double max_angle = 0.0;
  double worst_size_ratio = 0.0;
  double theorem1_bound = 0.0;
  std::size_t encroachment_events = 0;
  std::size_t delaunay_violations = 0;
  bool delaunay_ok = false;
  bool pslg_conforming = false;
  bool angle_target_met = false;
  std::vector<SmallAngleReport> small_angles;

  bool passed() const {
    return delaunay_ok && pslg_conforming && encroachment_events == 0 && angle_target_met;
  }
};

struct VerifyInput {
  const Mesh* mesh = nullptr;
  const Pslg* input = nullptr;
  const SplitResult* split = nullptr;
  double theta = 0.0;
  DelaunayMode mode = DelaunayMode::truly;
  std::vector<SmallAngleRecord> small_angles;
};

// Every field is recomputed from the mesh; nothing is copied from refinement statistics.
QualityReport verify(const VerifyInput& in);

struct AngleHistogram {
  double bin_width = 0.0;  // radians over [0, pi]
  std::vector<std::size_t> min_angles;
  std::vector<std::size_t> max_angles;
};
AngleHistogram angle_histogram(const Mesh& mesh, std::size_t bins);

std::string to_json(const QualityReport& report);

}  // namespace frontmesh
