#include "frontmesh/lfs.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "frontmesh/errors.hpp"

namespace frontmesh {

SegmentFrame SegmentFrame::of(const Pslg& pslg, std::size_t s) {
  const Point2 a = pslg.vertices[pslg.segments[s].a];
  const Point2 b = pslg.vertices[pslg.segments[s].b];
  const double len = distance(a, b);
  return {a, (1.0 / len) * (b - a), len};
}

double DistanceFunction::operator()(double x) const {
  struct Visitor {
    double x;
    double operator()(const PointDistance& p) const { return std::hypot(x - p.a, p.b); }
    double operator()(const LineDistance& l) const { return l.c0 + l.c1 * x; }
    double operator()(const FarthestEndpoint& f) const { return std::max(f.length - x, x); }
  };
  return std::visit(Visitor{x}, kind);
}

double eval_form(const PieceForm& f, double x) {
  if (const auto* lin = std::get_if<LinearForm>(&f)) return lin->b - lin->a * x;
  const auto& q = std::get<SqrtQuadraticForm>(f);
  return std::hypot(x + q.a, q.h);
}

FeatureSizeFunction::FeatureSizeFunction(double length, std::vector<FeaturePiece> pieces)
    : length_(length), pieces_(std::move(pieces)) {}

const FeaturePiece& FeatureSizeFunction::piece_at(double x) const {
  if (!(x >= 0.0 && x <= length_) || pieces_.empty())
    throw std::out_of_range("feature size queried outside [0, length]");
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const FeaturePiece& p, double v) { return p.hi < v; });
  if (it == pieces_.end()) --it;
  return *it;
}

double FeatureSizeFunction::operator()(double x) const { return piece_at(x)(x); }

std::vector<double> FeatureSizeFunction::breakpoints() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) out.push_back(pieces_[i].hi);
  return out;
}

double lfs_eval(const FeatureSizeFunction& f, double x) { return f(x); }

// ------------------------------------------------------- distance functions

std::vector<DistanceFunction> distance_functions_for(const Pslg& pslg, std::size_t s) {
  const SegmentFrame fr = SegmentFrame::of(pslg, s);
  const double l = fr.length;
  auto local = [&](Point2 p) {
    const Point2 d = p - fr.origin;
    return Point2{dot(d, fr.dir), std::fabs(cross(fr.dir, d))};
  };

  std::vector<DistanceFunction> out;
  for (std::size_t v = 0; v < pslg.vertices.size(); ++v) {
    if (pslg.has_endpoint(s, v)) continue;
    const Point2 q = local(pslg.vertices[v]);
    out.push_back({PointDistance{q.x, q.y}, 0.0, l});
  }

  for (std::size_t t = 0; t < pslg.segments.size(); ++t) {
    if (pslg.adjacent(s, t)) continue;
    const Point2 c = pslg.vertices[pslg.segments[t].a];
    const Point2 d = pslg.vertices[pslg.segments[t].b];
    const Point2 w = d - c;
    const double w2 = dot(w, w);
    // Projection parameter of fr.at(x) onto cd: tau0 + tau1 * x.
    const double tau0 = dot(fr.origin - c, w) / w2;
    const double tau1 = dot(fr.dir, w) / w2;
    double band_lo, band_hi;
    if (tau1 == 0.0) {
      if (tau0 < 0.0 || tau0 > 1.0) {
        band_lo = band_hi = std::numeric_limits<double>::quiet_NaN();
      } else {
        band_lo = 0.0;
        band_hi = l;
      }
    } else {
      const double x0 = -tau0 / tau1, x1 = (1.0 - tau0) / tau1;
      band_lo = std::max(0.0, std::min(x0, x1));
      band_hi = std::min(l, std::max(x0, x1));
    }
    const bool has_band = band_lo < band_hi;
    if (has_band) {
      const Point2 n = (1.0 / std::sqrt(w2)) * Point2{-w.y, w.x};
      double c0 = dot(fr.origin - c, n), c1 = dot(fr.dir, n);
      if (c0 + c1 * 0.5 * (band_lo + band_hi) < 0.0) {
        c0 = -c0;
        c1 = -c1;
      }
      out.push_back({LineDistance{c0, c1}, band_lo, band_hi});
    }
    // Outside the band the nearest point of cd is one of its endpoints.
    auto endpoint_piece = [&](Point2 e, double lo, double hi) {
      lo = std::max(0.0, lo);
      hi = std::min(l, hi);
      if (lo < hi) {
        const Point2 q = local(e);
        out.push_back({PointDistance{q.x, q.y}, lo, hi});
      }
    };
    if (!has_band) {
      endpoint_piece(tau0 + tau1 * 0.5 * l < 0.0 ? c : d, 0.0, l);
    } else {
      // Side where tau < 0 belongs to c, tau > 1 to d.
      const bool c_left = tau1 > 0.0;
      endpoint_piece(c_left ? c : d, 0.0, band_lo);
      endpoint_piece(c_left ? d : c, band_hi, l);
    }
  }
  out.push_back({FarthestEndpoint{l}, 0.0, l});
  return out;
}

// ----------------------------------------------------------- lower envelope

namespace {

struct Atom {
  PieceForm form;
  double lo, hi;
};

double form_min(const Atom& a) {
  double m = std::min(eval_form(a.form, a.lo), eval_form(a.form, a.hi));
  if (const auto* q = std::get_if<SqrtQuadraticForm>(&a.form))
    if (-q->a > a.lo && -q->a < a.hi) m = std::min(m, q->h);
  return m;
}

bool same_form(const PieceForm& f, const PieceForm& g) {
  if (f.index() != g.index()) return false;
  if (const auto* a = std::get_if<LinearForm>(&f)) {
    const auto& b = std::get<LinearForm>(g);
    return a->a == b.a && a->b == b.b;
  }
  const auto& a = std::get<SqrtQuadraticForm>(f);
  const auto& b = std::get<SqrtQuadraticForm>(g);
  return a.a == b.a && a.h == b.h;
}

void quadratic_roots(double A, double B, double C, std::vector<double>& out) {
  if (A == 0.0) {
    if (B != 0.0) out.push_back(-C / B);
    return;
  }
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (B + (B >= 0.0 ? sq : -sq));
  if (q != 0.0) {
    out.push_back(q / A);
    out.push_back(C / q);
  } else {
    out.push_back(0.0);
  }
}

std::vector<double> raw_roots(const PieceForm& f, const PieceForm& g) {
  std::vector<double> out;
  const auto* fl = std::get_if<LinearForm>(&f);
  const auto* gl = std::get_if<LinearForm>(&g);
  if (fl && gl) {
    if (fl->a != gl->a) out.push_back((fl->b - gl->b) / (fl->a - gl->a));
    return out;
  }
  if (!fl && !gl) {
    const auto& p = std::get<SqrtQuadraticForm>(f);
    const auto& q = std::get<SqrtQuadraticForm>(g);
    if (p.a != q.a) out.push_back((q.b - p.b) / (2.0 * (p.a - q.a)));
    return out;
  }
  const LinearForm& lin = fl ? *fl : *gl;
  const auto& sq = std::get<SqrtQuadraticForm>(fl ? g : f);
  // (b - a x)^2 = x^2 + 2 alpha x + beta
  quadratic_roots(lin.a * lin.a - 1.0, -2.0 * (lin.a * lin.b + sq.a), lin.b * lin.b - sq.b, out);
  return out;
}

double polish(const PieceForm& f, const PieceForm& g, double x, double lo, double hi, double scale) {
  auto diff = [&](double t) { return eval_form(f, t) - eval_form(g, t); };
  const double delta = 1e-7 * scale;
  double a = std::max(lo, x - delta), b = std::min(hi, x + delta);
  double fa = diff(a), fb = diff(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0)) return x;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = diff(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

FeatureSizeFunction lower_envelope(const std::vector<DistanceFunction>& funcs, double length) {
  if (!(length > 0.0)) throw DegenerateError("segment has zero length");
  std::vector<Atom> atoms;
  for (const auto& fn : funcs) {
    const double lo = std::max(0.0, fn.lo), hi = std::min(length, fn.hi);
    if (!(lo < hi)) continue;
    if (const auto* p = std::get_if<PointDistance>(&fn.kind)) {
      atoms.push_back({SqrtQuadraticForm{-p->a, p->a * p->a + p->b * p->b, std::fabs(p->b)}, lo, hi});
    } else if (const auto* ld = std::get_if<LineDistance>(&fn.kind)) {
      atoms.push_back({LinearForm{ld->c0, -ld->c1}, lo, hi});
    } else {
      const double l = std::get<FarthestEndpoint>(fn.kind).length;
      const double mid = 0.5 * l;
      if (lo < mid) atoms.push_back({LinearForm{l, 1.0}, lo, std::min(hi, mid)});
      if (hi > mid) atoms.push_back({LinearForm{0.0, -1.0}, std::max(lo, mid), hi});
    }
  }
  if (atoms.empty()) throw DegenerateError("no distance functions cover the segment");

  // Nothing whose minimum exceeds the global cap can ever be lowest.
  double cap = std::numeric_limits<double>::infinity();
  for (const auto& fn : funcs)
    if (std::holds_alternative<FarthestEndpoint>(fn.kind) && fn.lo <= 0.0 && fn.hi >= length) cap = length;
  if (cap < std::numeric_limits<double>::infinity()) {
    std::erase_if(atoms, [&](const Atom& a) { return form_min(a) > cap; });
  }

  std::vector<double> cuts{0.0, length};
  for (const auto& a : atoms) {
    cuts.push_back(a.lo);
    cuts.push_back(a.hi);
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      const double lo = std::max(atoms[i].lo, atoms[j].lo);
      const double hi = std::min(atoms[i].hi, atoms[j].hi);
      if (!(lo < hi)) continue;
      for (double r : raw_roots(atoms[i].form, atoms[j].form)) {
        if (!(r > lo && r < hi)) continue;
        cuts.push_back(polish(atoms[i].form, atoms[j].form, r, lo, hi, length));
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::erase_if(cuts, [&](double c) { return c < 0.0 || c > length; });

  std::vector<FeaturePiece> pieces;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double x0 = cuts[k], x1 = cuts[k + 1];
    const double mid = 0.5 * (x0 + x1);
    const Atom* best = nullptr;
    double best_val = std::numeric_limits<double>::infinity();
    for (const auto& a : atoms) {
      if (a.lo > x0 || a.hi < x1) continue;
      const double v = eval_form(a.form, mid);
      if (v < best_val) {
        best_val = v;
        best = &a;
      }
    }
    if (!best) throw DegenerateError("gap in distance function coverage");
    if (!pieces.empty() && same_form(pieces.back().form, best->form)) {
      pieces.back().hi = x1;
    } else {
      pieces.push_back({x0, x1, best->form});
    }
  }
  pieces.back().hi = length;

  for (const auto& p : pieces) {
    if (!(form_min({p.form, p.lo, p.hi}) > 0.0))
      throw DegenerateError("feature size vanishes on a segment");
  }
  return FeatureSizeFunction(length, std::move(pieces));
}

FeatureSizeFunction feature_size_for(const Pslg& pslg, std::size_t s) {
  return lower_envelope(distance_functions_for(pslg, s), pslg.length(s));
}

std::vector<FeatureSizeFunction> feature_sizes(const Pslg& pslg, unsigned threads) {
  const std::size_t n = pslg.segments.size();
  std::vector<FeatureSizeFunction> out(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t s = 0; s < n; ++s) out[s] = feature_size_for(pslg, s);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t s = w; s < n; s += threads) out[s] = feature_size_for(pslg, s);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// ------------------------------------------------------------------ oracles

double lfs_oracle(const Pslg& pslg, Point2 p) {
  const std::size_t nv = pslg.vertices.size();
  struct Feature {
    double d;
    std::size_t id;  // < nv: vertex, otherwise segment id + nv
  };
  std::vector<Feature> feats;
  feats.reserve(nv + pslg.segments.size());
  for (std::size_t v = 0; v < nv; ++v) feats.push_back({distance(p, pslg.vertices[v]), v});
  for (std::size_t s = 0; s < pslg.segments.size(); ++s) {
    const Segment& seg = pslg.segments[s];
    feats.push_back({point_segment_distance(p, pslg.vertices[seg.a], pslg.vertices[seg.b]), nv + s});
  }
  std::sort(feats.begin(), feats.end(), [](const Feature& a, const Feature& b) {
    return a.d < b.d || (a.d == b.d && a.id < b.id);
  });
  auto nonadjacent = [&](std::size_t f, std::size_t g) {
    if (f == g) return false;
    const bool fv = f < nv, gv = g < nv;
    if (fv && gv) return true;
    if (fv) return !pslg.has_endpoint(g - nv, f);
    if (gv) return !pslg.has_endpoint(f - nv, g);
    return !pslg.adjacent(f - nv, g - nv);
  };
  for (std::size_t i = 1; i < feats.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (nonadjacent(feats[i].id, feats[j].id)) return feats[i].d;
  return std::numeric_limits<double>::infinity();
}

double lfs_on_segment_oracle(const Pslg& pslg, std::size_t s, Point2 p) {
  const Point2 a = pslg.vertices[pslg.segments[s].a];
  const Point2 b = pslg.vertices[pslg.segments[s].b];
  double best = std::max(distance(p, a), distance(p, b));
  for (std::size_t v = 0; v < pslg.vertices.size(); ++v)
    if (!pslg.has_endpoint(s, v)) best = std::min(best, distance(p, pslg.vertices[v]));
  for (std::size_t t = 0; t < pslg.segments.size(); ++t) {
    if (pslg.adjacent(s, t)) continue;
    const Segment& seg = pslg.segments[t];
    best = std::min(best, point_segment_distance(p, pslg.vertices[seg.a], pslg.vertices[seg.b]));
  }
  return best;
}

}  // namespace frontmesh
