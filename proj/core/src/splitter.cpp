#include "frontmesh/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "frontmesh/errors.hpp"

namespace frontmesh {

namespace {
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kStrict = 1e-9;
}  // namespace

// ------------------------------------------------------------ mapping pieces

double MappingPiece::value(double tau) const {
  if (const auto* e = std::get_if<ExponentialForm>(&form)) return x_lo - f_lo * std::expm1(-e->a * tau) / e->a;
  if (std::holds_alternative<AffineForm>(form)) return x_lo + f_lo * tau;
  const auto& h = std::get<HyperbolicForm>(form);
  const double u0 = x_lo + h.a;
  const double s = std::sinh(0.5 * tau);
  return x_lo + 2.0 * u0 * s * s + f_lo * std::sinh(tau);
}

double MappingPiece::slope(double tau) const {
  if (const auto* e = std::get_if<ExponentialForm>(&form)) return f_lo * std::exp(-e->a * tau);
  if (std::holds_alternative<AffineForm>(form)) return f_lo;
  const auto& h = std::get<HyperbolicForm>(form);
  return (x_lo + h.a) * std::sinh(tau) + f_lo * std::cosh(tau);
}

double MappingPiece::local_time(double x) const {
  double tau;
  if (const auto* e = std::get_if<ExponentialForm>(&form)) {
    tau = -std::log1p(-e->a * (x - x_lo) / f_lo) / e->a;
  } else if (std::holds_alternative<AffineForm>(form)) {
    tau = (x - x_lo) / f_lo;
  } else {
    const auto& hy = std::get<HyperbolicForm>(form);
    const double h = std::get<SqrtQuadraticForm>(feature).h;
    const double u0 = x_lo + hy.a, u = x + hy.a;
    const double fu = std::hypot(u, h);
    if (u0 >= 0.0) {
      tau = std::log((u + fu) / (u0 + f_lo));
    } else {
      auto gm = [&](double v, double fv) { return v <= 0.0 ? fv - v : h * h / (fv + v); };
      tau = std::log(gm(u0, f_lo) / gm(u, fu));
    }
  }
  if (!std::isfinite(tau)) tau = 0.0;
  // Newton polish, then a bracketed bisection if that still misses.
  const double scale = std::max({std::fabs(x), std::fabs(x_hi), std::fabs(x_hi - x_lo), 1e-300});
  for (int it = 0; it < 3; ++it) {
    const double d = slope(tau);
    if (!(d > 0.0)) break;
    tau = std::max(0.0, tau - (value(tau) - x) / d);
  }
  if (std::fabs(value(tau) - x) <= 1e-12 * scale) return tau;
  double lo = 0.0, hi = std::max(tau, 1e-12);
  while (value(hi) < x && hi < 1e6) hi *= 2.0;
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (value(mid) < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

MappingFunction::MappingFunction(const FeatureSizeFunction& f) : length_(f.length()) {
  double t = 0.0;
  for (const auto& fp : f.pieces()) {
    MappingPiece mp;
    mp.x_lo = fp.lo;
    mp.x_hi = fp.hi;
    mp.feature = fp.form;
    mp.f_lo = fp(fp.lo);
    if (const auto* lin = std::get_if<LinearForm>(&fp.form)) {
      if (std::fabs(lin->a) < 1e-12) {
        mp.form = AffineForm{mp.f_lo, fp.lo};
      } else {
        mp.form = ExponentialForm{lin->a, lin->b, fp.lo - lin->b / lin->a};
      }
    } else {
      const auto& q = std::get<SqrtQuadraticForm>(fp.form);
      const double u0 = fp.lo + q.a;
      mp.form = HyperbolicForm{q.a, 0.5 * (u0 + mp.f_lo), 0.5 * (u0 - mp.f_lo)};
    }
    mp.t_lo = t;
    t += mp.local_time(fp.hi);
    mp.t_hi = t;
    pieces_.push_back(mp);
  }
  t_star_ = t;
}

const MappingPiece& MappingFunction::piece_at(double t) const {
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), t,
                             [](const MappingPiece& p, double v) { return p.t_hi < v; });
  if (it == pieces_.end()) --it;
  return *it;
}

double MappingFunction::operator()(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= t_star_) return length_;
  const auto& p = piece_at(t);
  return std::clamp(p.value(t - p.t_lo), p.x_lo, p.x_hi);
}

double MappingFunction::derivative(double t) const {
  t = std::clamp(t, 0.0, t_star_);
  const auto& p = piece_at(t);
  return p.slope(t - p.t_lo);
}

double MappingFunction::inverse(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= length_) return t_star_;
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const MappingPiece& p, double v) { return p.x_hi < v; });
  if (it == pieces_.end()) --it;
  return it->t_lo + it->local_time(x);
}

MappingFunction solve_mapping(const FeatureSizeFunction& f) { return MappingFunction(f); }

double reference_length(const MappingFunction& m) { return m.t_star(); }

// --------------------------------------------------- termination conditions

SplitBounds bounds_for(int n_star, double t_min) {
  if (n_star < 2) throw ConfigError("n* must be at least 2");
  if (!(t_min > 0.0)) throw ConfigError("reference length must be positive");
  SplitBounds b;
  b.n_star = n_star;
  b.t_min = t_min;
  b.a_star = n_star / t_min - 1.0 / (2.0 * kLn2) - 1.0;
  b.b_star = n_star / t_min + 1.0;
  if (!(b.a_star > 0.0)) throw ConfigError("n* = " + std::to_string(n_star) + " gives a non-positive lower bound");
  b.ratio = b.b_star / b.a_star;
  return b;
}

void check_theta(double theta) {
  if (!(theta > 0.0)) throw ConfigError("theta must be positive");
  if (!(theta < kPi / 6.0)) throw ConfigError("theta must be below 30 degrees");
}

double alpha_of(double theta) { return 1.0 / (2.0 * std::sin(theta)); }

double required_astar(double theta, DelaunayMode mode) {
  check_theta(theta);
  const double alpha = alpha_of(theta);
  const double g = alpha / (alpha - 1.0);
  const double gap = 1.0 / kLn2 + 2.0;
  const double floor_a = kInvSqrt2 + kStrict;
  if (mode == DelaunayMode::truly) return std::max(floor_a, (gap + g + 2.0) / (kSqrt2 - 1.0));
  const double two_cos = 2.0 * std::cos(theta);
  const double visible_gap = (gap + g + 2.0) / (two_cos - 1.0);
  const double k = 1.0 / two_cos;
  const double inner_quality = (kInvSqrt2 + k * (gap + g + 1.0)) / (1.0 - k) + kStrict;
  return std::max({floor_a, visible_gap, inner_quality});
}

bool conditions_hold(double a_star, double b_star, double theta, DelaunayMode mode) {
  const double alpha = alpha_of(theta);
  const double g = alpha / (alpha - 1.0);
  if (!(a_star > kInvSqrt2)) return false;
  const double lhs = b_star / a_star + g / a_star + 2.0 / a_star;
  if (mode == DelaunayMode::truly) return lhs <= kSqrt2;
  const double two_cos = 2.0 * std::cos(theta);
  return lhs <= two_cos && (a_star - kInvSqrt2) / (b_star + g + 1.0) > 1.0 / two_cos;
}

SplitBounds choose_nstar(const std::vector<MappingFunction>& maps, double theta, DelaunayMode mode,
                         std::optional<int> override_n) {
  if (maps.empty()) throw ConfigError("no segments to split");
  double t_min = std::numeric_limits<double>::infinity();
  for (const auto& m : maps) t_min = std::min(t_min, m.t_star());
  const double required = required_astar(theta, mode);
  SplitBounds b;
  if (override_n) {
    b = bounds_for(*override_n, t_min);
  } else {
    int n = std::max(2, static_cast<int>(std::ceil((required + 1.0 + 1.0 / (2.0 * kLn2)) * t_min)));
    auto a_of = [&](int k) { return k / t_min - 1.0 / (2.0 * kLn2) - 1.0; };
    while (a_of(n) < required) ++n;
    while (n > 2 && a_of(n - 1) >= required) --n;
    b = bounds_for(n, t_min);
  }
  b.required_a_star = required;
  b.conditions_satisfied = conditions_hold(b.a_star, b.b_star, theta, mode);
  return b;
}

// ------------------------------------------------------------------ split

SplitResult split(const Pslg& pslg, const SplitBounds& bounds, const std::vector<FeatureSizeFunction>& sizes,
                  const std::vector<MappingFunction>& maps) {
  if (sizes.size() != pslg.segments.size() || maps.size() != pslg.segments.size())
    throw std::invalid_argument("one feature size and mapping per segment required");
  SplitResult out;
  out.bounds = bounds;
  out.refined.vertices = pslg.vertices;
  out.refined.vertex_markers = pslg.vertex_markers;
  out.refined.holes = pslg.holes;
  out.refined.first_index = pslg.first_index;

  const auto inc = pslg.incidence();
  out.vertices.resize(pslg.vertices.size());
  for (std::size_t v = 0; v < pslg.vertices.size(); ++v) {
    auto& info = out.vertices[v];
    info.origin = VertexOrigin::input;
    info.segments = inc[v];
    double lfs = std::numeric_limits<double>::infinity();
    for (std::size_t s : inc[v]) lfs = std::min(lfs, sizes[s](pslg.segments[s].a == v ? 0.0 : sizes[s].length()));
    info.lfs = std::isfinite(lfs) ? lfs : 0.0;
  }

  for (std::size_t s = 0; s < pslg.segments.size(); ++s) {
    const Segment& seg = pslg.segments[s];
    const Point2 a = pslg.vertices[seg.a], b = pslg.vertices[seg.b];
    const double l = sizes[s].length();
    const double t_i = maps[s].t_star();
    // Segments with the same reference length must get exactly n* pieces.
    const int n_i = std::max(2, static_cast<int>(std::floor(bounds.n_star * t_i / bounds.t_min + 1e-9)));
    SegmentSplit ss;
    ss.pieces = n_i;
    ss.t_star = t_i;
    ss.chain.push_back(seg.a);
    for (int j = 1; j < n_i; ++j) {
      const double x = maps[s](j * t_i / n_i);
      ss.params.push_back(x);
      const double r = x / l;
      const Point2 p{a.x + r * (b.x - a.x), a.y + r * (b.y - a.y)};
      const std::size_t id = out.refined.add_vertex(p, seg.marker);
      SplitVertexInfo info;
      info.origin = VertexOrigin::split;
      info.segments = {s};
      info.param = x;
      info.lfs = sizes[s](x);
      out.vertices.push_back(std::move(info));
      ss.chain.push_back(id);
    }
    ss.chain.push_back(seg.b);
    for (std::size_t k = 0; k + 1 < ss.chain.size(); ++k) {
      out.refined.add_segment(ss.chain[k], ss.chain[k + 1], seg.marker);
      out.subsegment_parent.push_back(s);
    }
    out.segments.push_back(std::move(ss));
  }
  return out;
}

}  // namespace frontmesh
