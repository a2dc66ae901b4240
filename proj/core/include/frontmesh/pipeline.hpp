#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontmesh/cdt.hpp"
#include "frontmesh/lfs.hpp"
#include "frontmesh/pslg.hpp"
#include "frontmesh/quality.hpp"
#include "frontmesh/refine.hpp"
#include "frontmesh/splitter.hpp"

namespace frontmesh {

struct PipelineOptions {
  double theta_deg = 25.0;
  DelaunayMode mode = DelaunayMode::truly;
  std::optional<int> n_star;
  bool strict = false;
  std::size_t max_insertions = 1000000;
  unsigned threads = 1;
  bool record_events = true;
};

struct PipelineResult {
  std::vector<FeatureSizeFunction> sizes;
  std::vector<MappingFunction> maps;
  PreparedMesh prepared;
  std::vector<SmallAngleRecord> small_angles;
  RefineStats stats;
  QualityReport report;
  std::vector<std::string> warnings;

  // Markers for every mesh vertex: input markers, inherited segment markers, 0 for Steiner points.
  std::vector<int> vertex_markers() const;
  std::vector<std::array<VertexId, 3>> skipped_triangles() const;
};

// Validates, splits, triangulates, refines and verifies.
PipelineResult run_pipeline(const Pslg& pslg, const PipelineOptions& options);

}  // namespace frontmesh
