#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frontmesh/cdt.hpp"
#include "frontmesh/lfs.hpp"
#include "frontmesh/pslg.hpp"

namespace frontmesh {

// Triangle-style .node / .ele with 17 significant digits. Only domain
// triangles are written.
void write_node(std::ostream& out, const Mesh& mesh, const std::vector<int>& markers, int base);
void write_ele(std::ostream& out, const Mesh& mesh, int base);

struct NodeFile {
  std::vector<Point2> points;
  std::vector<int> markers;
};
NodeFile read_node(std::istream& in);
std::vector<std::array<std::size_t, 3>> read_ele(std::istream& in);  // zero-based

struct SvgOptions {
  std::vector<std::array<VertexId, 3>> shaded;  // triangles drawn filled
};
// One element per domain triangle and per subsegment under a single root.
std::string emit_svg(const Mesh& mesh, const Pslg& subsegments, const SvgOptions& opts = {});

void write_lfs_csv(std::ostream& out, const std::vector<FeatureSizeFunction>& sizes, std::size_t samples);

}  // namespace frontmesh
