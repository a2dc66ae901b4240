// Filtered exact predicates. The fast path uses the classic forward error
// bounds; anything inside the bound is recomputed with floating-point
// expansions, which are exact as long as nothing overflows or underflows.
#include <cmath>
#include <limits>
#include <vector>

#include "frontmesh/geometry.hpp"

namespace frontmesh {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kCcwBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccBound = (10.0 + 96.0 * kEps) * kEps;

using Expansion = std::vector<double>;

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

Expansion from_diff(double a, double b) {
  double x, y;
  two_sum(a, -b, x, y);
  Expansion e;
  if (y != 0.0) e.push_back(y);
  if (x != 0.0) e.push_back(x);
  return e;
}

// Adds a scalar into a nonoverlapping expansion, eliminating zeros.
Expansion grow(const Expansion& e, double b) {
  Expansion h;
  h.reserve(e.size() + 1);
  double q = b;
  for (double ei : e) {
    double s, r;
    two_sum(q, ei, s, r);
    if (r != 0.0) h.push_back(r);
    q = s;
  }
  if (q != 0.0 || h.empty()) h.push_back(q);
  return h;
}

Expansion add(const Expansion& e, const Expansion& f) {
  Expansion h = e;
  for (double fi : f) h = grow(h, fi);
  return h;
}

Expansion scale(const Expansion& e, double b) {
  Expansion h;
  if (e.empty() || b == 0.0) return h;
  h.reserve(2 * e.size());
  double q, lo;
  two_product(e[0], b, q, lo);
  if (lo != 0.0) h.push_back(lo);
  for (std::size_t i = 1; i < e.size(); ++i) {
    double p1, p0;
    two_product(e[i], b, p1, p0);
    double s, r;
    two_sum(q, p0, s, r);
    if (r != 0.0) h.push_back(r);
    two_sum(p1, s, q, r);
    if (r != 0.0) h.push_back(r);
  }
  if (q != 0.0) h.push_back(q);
  return h;
}

Expansion mul(const Expansion& e, const Expansion& f) {
  Expansion h;
  for (double fi : f) h = add(h, scale(e, fi));
  return h;
}

Expansion neg(Expansion e) {
  for (double& v : e) v = -v;
  return e;
}

int sign_of(const Expansion& e) {
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (*it > 0.0) return 1;
    if (*it < 0.0) return -1;
  }
  return 0;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int orient_exact(Point2 a, Point2 b, Point2 c) {
  const Expansion acx = from_diff(a.x, c.x), acy = from_diff(a.y, c.y);
  const Expansion bcx = from_diff(b.x, c.x), bcy = from_diff(b.y, c.y);
  return sign_of(add(mul(acx, bcy), neg(mul(acy, bcx))));
}

int incircle_exact(Point2 a, Point2 b, Point2 c, Point2 d) {
  const Expansion adx = from_diff(a.x, d.x), ady = from_diff(a.y, d.y);
  const Expansion bdx = from_diff(b.x, d.x), bdy = from_diff(b.y, d.y);
  const Expansion cdx = from_diff(c.x, d.x), cdy = from_diff(c.y, d.y);
  const Expansion alift = add(mul(adx, adx), mul(ady, ady));
  const Expansion blift = add(mul(bdx, bdx), mul(bdy, bdy));
  const Expansion clift = add(mul(cdx, cdx), mul(cdy, cdy));
  const Expansion bc = add(mul(bdx, cdy), neg(mul(cdx, bdy)));
  const Expansion ca = add(mul(cdx, ady), neg(mul(adx, cdy)));
  const Expansion ab = add(mul(adx, bdy), neg(mul(bdx, ady)));
  return sign_of(add(add(mul(alift, bc), mul(blift, ca)), mul(clift, ab)));
}

}  // namespace

int orient2d(Point2 a, Point2 b, Point2 c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double sum = std::fabs(left) + std::fabs(right);
  if (std::fabs(det) > kCcwBound * sum) return sign_of(det);
  if (sum == 0.0) return 0;
  return orient_exact(a, b, c);
}

int incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  if (std::fabs(det) > kIccBound * permanent) return sign_of(det);
  return incircle_exact(a, b, c, d);
}

int dot_sign(Point2 p, Point2 a, Point2 b) {
  const double l = (a.x - p.x) * (b.x - p.x);
  const double r = (a.y - p.y) * (b.y - p.y);
  const double v = l + r;
  if (std::fabs(v) > kCcwBound * (std::fabs(l) + std::fabs(r))) return sign_of(v);
  const Expansion axp = from_diff(a.x, p.x), bxp = from_diff(b.x, p.x);
  const Expansion ayp = from_diff(a.y, p.y), byp = from_diff(b.y, p.y);
  return sign_of(add(mul(axp, bxp), mul(ayp, byp)));
}

}  // namespace frontmesh
