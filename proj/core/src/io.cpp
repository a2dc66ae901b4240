#include "frontmesh/io.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "frontmesh/errors.hpp"

namespace frontmesh {

void write_node(std::ostream& out, const Mesh& mesh, const std::vector<int>& markers, int base) {
  out << std::setprecision(17);
  out << mesh.vertex_count() << " 2 0 1\n";
  for (VertexId v = 0; v < mesh.vertex_count(); ++v) {
    const Point2 p = mesh.point(v);
    out << v + base << ' ' << p.x << ' ' << p.y << ' ' << (v < markers.size() ? markers[v] : 0) << '\n';
  }
}

void write_ele(std::ostream& out, const Mesh& mesh, int base) {
  const auto tris = mesh.domain_triangles();
  out << tris.size() << " 3 0\n";
  std::size_t id = 0;
  for (TriangleId t : tris) {
    const auto& v = mesh.vertices(t);
    out << id + base << ' ' << v[0] + base << ' ' << v[1] + base << ' ' << v[2] + base << '\n';
    ++id;
  }
}

namespace {
std::vector<std::string> tokens_of(std::istream& in, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ss(line);
    std::vector<std::string> t;
    for (std::string s; ss >> s;) t.push_back(s);
    if (!t.empty()) return t;
  }
  throw ParseError(line_no + 1, "unexpected end of file");
}
}  // namespace

NodeFile read_node(std::istream& in) {
  std::size_t ln = 0;
  const auto head = tokens_of(in, ln);
  const std::size_t n = std::stoul(head.at(0));
  const std::size_t attrs = head.size() > 2 ? std::stoul(head[2]) : 0;
  const bool marked = head.size() > 3 && head[3] == "1";
  NodeFile f;
  for (std::size_t k = 0; k < n; ++k) {
    const auto t = tokens_of(in, ln);
    if (t.size() < 3) throw ParseError(ln, "short node line");
    f.points.push_back({std::stod(t[1]), std::stod(t[2])});
    f.markers.push_back(marked && t.size() > 3 + attrs ? std::stoi(t[3 + attrs]) : 0);
  }
  return f;
}

std::vector<std::array<std::size_t, 3>> read_ele(std::istream& in) {
  std::size_t ln = 0;
  const auto head = tokens_of(in, ln);
  const std::size_t n = std::stoul(head.at(0));
  std::vector<std::array<std::size_t, 3>> out;
  long long base = -1;
  for (std::size_t k = 0; k < n; ++k) {
    const auto t = tokens_of(in, ln);
    if (t.size() < 4) throw ParseError(ln, "short element line");
    if (base < 0) base = std::stoll(t[0]);
    out.push_back({std::stoul(t[1]) - static_cast<std::size_t>(base), std::stoul(t[2]) - static_cast<std::size_t>(base),
                   std::stoul(t[3]) - static_cast<std::size_t>(base)});
  }
  return out;
}

std::string emit_svg(const Mesh& mesh, const Pslg& sub, const SvgOptions& opts) {
  const auto tris = mesh.domain_triangles();
  if (tris.empty()) throw Error("cannot draw an empty mesh");
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (TriangleId t : tris)
    for (Point2 p : mesh.corners(t)) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  const double w = x1 - x0, h = y1 - y0;
  const double mx = 0.05 * w, my = 0.05 * h;
  const double stroke = 0.002 * std::max(w, h);
  std::vector<std::array<VertexId, 3>> shaded = opts.shaded;
  for (auto& s : shaded) std::sort(s.begin(), s.end());
  std::sort(shaded.begin(), shaded.end());

  std::ostringstream o;
  o << std::setprecision(17);
  // y grows downwards in SVG, so the drawing uses -y.
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - mx << ' ' << -(y1 + my) << ' ' << w + 2 * mx
    << ' ' << h + 2 * my << "\">\n";
  for (TriangleId t : tris) {
    const auto c = mesh.corners(t);
    auto key = mesh.vertices(t);
    std::sort(key.begin(), key.end());
    const bool shade = std::binary_search(shaded.begin(), shaded.end(), key);
    o << "<polygon points=\"";
    for (int i = 0; i < 3; ++i) o << (i ? " " : "") << c[i].x << ',' << -c[i].y;
    o << "\" fill=\"" << (shade ? "#f4a582" : "none") << "\" stroke=\"#555\" stroke-width=\"" << stroke << "\"/>\n";
  }
  for (const auto& s : sub.segments) {
    const Point2 a = sub.vertices[s.a], b = sub.vertices[s.b];
    o << "<line x1=\"" << a.x << "\" y1=\"" << -a.y << "\" x2=\"" << b.x << "\" y2=\"" << -b.y
      << "\" stroke=\"#000\" stroke-width=\"" << 2.5 * stroke << "\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

void write_lfs_csv(std::ostream& out, const std::vector<FeatureSizeFunction>& sizes, std::size_t samples) {
  out << std::setprecision(17) << "segment,x,F(x)\n";
  samples = std::max<std::size_t>(samples, 2);
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    const double l = sizes[s].length();
    for (std::size_t k = 0; k < samples; ++k) {
      const double x = k + 1 == samples ? l : l * static_cast<double>(k) / static_cast<double>(samples - 1);
      out << s << ',' << x << ',' << sizes[s](x) << '\n';
    }
  }
}

}  // namespace frontmesh
