#pragma once

#include <cmath>
#include <random>
#include <string>

#include "frontmesh/geometry.hpp"
#include "frontmesh/pslg.hpp"

namespace frontmesh::testing {

inline std::string data_path(const std::string& name) { return std::string(FRONTMESH_DATA_DIR) + "/" + name; }

inline void add_loop(Pslg& g, const std::vector<Point2>& pts, int marker) {
  const std::size_t first = g.vertices.size();
  for (const auto& p : pts) g.add_vertex(p, marker);
  for (std::size_t i = 0; i < pts.size(); ++i) g.add_segment(first + i, first + (i + 1) % pts.size(), marker);
}

inline std::vector<Point2> ngon(Point2 c, double r, int n, double phase, std::mt19937_64& rng, double jitter) {
  std::uniform_real_distribution<double> u(-jitter, jitter);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) {
    const double t = phase + 2 * kPi * i / n + u(rng) * (2 * kPi / n);
    const double rr = r * (1 + u(rng));
    pts.push_back({c.x + rr * std::cos(t), c.y + rr * std::sin(t)});
  }
  return pts;
}

// Outer and inner polygons with every corner angle at least 90 degrees.
inline Pslg random_holed_polygon(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sides(5, 8);
  std::uniform_real_distribution<double> phase(0, 2 * kPi);
  std::uniform_real_distribution<double> scale(0.5, 4.0);
  std::uniform_real_distribution<double> inner(0.2, 0.45);
  std::uniform_real_distribution<double> shift(-0.1, 0.1);
  const double r = scale(rng);
  const Point2 c{shift(rng) * 10, shift(rng) * 10};
  Pslg g;
  add_loop(g, ngon(c, r, sides(rng), phase(rng), rng, 0.04), 1);
  const Point2 hc{c.x + shift(rng) * r, c.y + shift(rng) * r};
  add_loop(g, ngon(hc, inner(rng) * r, sides(rng), phase(rng), rng, 0.04), 2);
  g.holes.push_back(hc);
  return g;
}

inline double min_corner_angle(const Pslg& g) {
  double best = kPi;
  const auto inc = g.incidence();
  for (const auto& segs : inc)
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (std::size_t j = i + 1; j < segs.size(); ++j)
        best = std::min(best, angle_between_adjacent(g, segs[i], segs[j]));
  return best;
}

}  // namespace frontmesh::testing
