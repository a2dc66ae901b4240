#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frontmesh/cdt.hpp"
#include "frontmesh/errors.hpp"
#include "frontmesh/lfs.hpp"
#include "frontmesh/pslg.hpp"
#include "frontmesh/splitter.hpp"

namespace frontmesh {

bool is_skinny(Point2 a, Point2 b, Point2 c, double theta);

// Point on the perpendicular bisector of pq, on the side of hint, seeing pq
// under the angle theta.
Point2 offcenter(Point2 p, Point2 q, Point2 hint, double theta);

struct SteinerChoice {
  Point2 point;
  bool used_offcenter = true;
  std::array<int, 2> shortest_edge{0, 1};  // local corner indices of the shortest edge
};
// Off-center or circumcenter, whichever is nearer the shortest edge.
SteinerChoice steiner_point(Point2 a, Point2 b, Point2 c, double theta);

struct RefineConfig {
  double theta = 0.0;
  DelaunayMode mode = DelaunayMode::truly;
  SplitBounds bounds;
  std::vector<SmallAngleRecord> small_angles;
  std::size_t max_insertions = 1000000;
  bool strict = false;
  bool record_events = true;
};

// Mesh-level view of which input segments host each vertex.
struct VertexContext {
  const std::vector<SplitVertexInfo>* split_vertices = nullptr;
  const std::vector<SmallAngleRecord>* small_angles = nullptr;
  double b_star = 1.0;
};

// Shortest edge pq runs between two segments forming a small angle and is
// shorter than max(lfs(p), lfs(q)) / B*.
bool across_small_angle(VertexId p, VertexId q, const Mesh& mesh, const VertexContext& ctx);
const SmallAngleRecord* small_angle_between(VertexId p, VertexId q, const VertexContext& ctx);

// Candidate separated from its triangle by a subsegment, or (truly mode)
// strictly inside some diametral circle.
bool check_encroachment(Point2 candidate, const std::array<Point2, 3>& triangle,
                        const std::vector<std::array<Point2, 2>>& subsegments, DelaunayMode mode);

enum class EventKind { insert, skip, encroach };

struct RefineEvent {
  EventKind kind = EventKind::insert;
  std::array<VertexId, 3> triangle{};
  Point2 point;
  bool offcenter = false;
  double shortest_edge = 0.0;
  double nearest = 0.0;  // distance from the new vertex to its nearest neighbour
  VertexId vertex = kGhost;
};

struct RefineStats {
  std::size_t insertions = 0;
  std::size_t skipped_small_angle = 0;
  std::size_t encroachment_events = 0;
  std::size_t queue_max = 0;
  std::vector<RefineEvent> events;
};

class NonTerminationError : public Error {
 public:
  NonTerminationError(const std::string& what, RefineStats stats) : Error(what), stats_(std::move(stats)) {}
  const RefineStats& stats() const { return stats_; }

 private:
  RefineStats stats_;
};

class EncroachmentError : public Error {
 public:
  EncroachmentError(const std::string& what, RefineStats stats) : Error(what), stats_(std::move(stats)) {}
  const RefineStats& stats() const { return stats_; }

 private:
  RefineStats stats_;
};

struct PreparedMesh {
  SplitResult split;
  Mesh mesh;
  int doublings = 0;
  bool recovered = true;
};

// Splits the input, triangulates and recovers the subsegments. In truly mode
// n* is doubled until the Delaunay triangulation contains every subsegment.
PreparedMesh prepare_mesh(const Pslg& pslg, const std::vector<FeatureSizeFunction>& sizes,
                          const std::vector<MappingFunction>& maps, double theta, DelaunayMode mode,
                          std::optional<int> n_star = std::nullopt, int max_doublings = 20);

RefineStats refine(Mesh& mesh, const SplitResult& split, const RefineConfig& config);

}  // namespace frontmesh
