#include "frontmesh/pslg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "frontmesh/errors.hpp"

namespace frontmesh {

std::size_t Pslg::add_vertex(Point2 p, int marker) {
  vertices.push_back(p);
  vertex_markers.push_back(marker);
  return vertices.size() - 1;
}

std::size_t Pslg::add_segment(std::size_t a, std::size_t b, int marker) {
  segments.push_back({a, b, marker});
  return segments.size() - 1;
}

bool Pslg::has_endpoint(std::size_t s, std::size_t v) const {
  return segments[s].a == v || segments[s].b == v;
}

bool Pslg::adjacent(std::size_t s1, std::size_t s2) const {
  if (s1 == s2) return true;
  const Segment& p = segments[s1];
  return has_endpoint(s2, p.a) || has_endpoint(s2, p.b);
}

double Pslg::length(std::size_t s) const {
  return distance(vertices[segments[s].a], vertices[segments[s].b]);
}

std::vector<std::vector<std::size_t>> Pslg::incidence() const {
  std::vector<std::vector<std::size_t>> inc(vertices.size());
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (segments[s].a < vertices.size()) inc[segments[s].a].push_back(s);
    if (segments[s].b < vertices.size() && segments[s].b != segments[s].a) inc[segments[s].b].push_back(s);
  }
  return inc;
}

// ---------------------------------------------------------------- parsing

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty, comment-stripped line split into tokens.
  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  std::vector<std::string> expect(const char* what) {
    auto t = next();
    if (!t) throw ParseError(line_no_ + 1, std::string("unexpected end of file, expected ") + what);
    return *t;
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

double to_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, "expected a number, got '" + s + "'");
  return v;
}

long long to_int(const std::string& s, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return v;
}

void need(const std::vector<std::string>& t, std::size_t n, std::size_t line, const char* what) {
  if (t.size() < n) throw ParseError(line, std::string("too few fields in ") + what);
}

}  // namespace

Pslg parse_poly(std::istream& in) {
  LineReader r(in);
  Pslg out;

  auto head = r.expect("vertex header");
  need(head, 1, r.line(), "vertex header");
  const long long nv = to_int(head[0], r.line());
  const long long dim = head.size() > 1 ? to_int(head[1], r.line()) : 2;
  const long long nattr = head.size() > 2 ? to_int(head[2], r.line()) : 0;
  const long long vmark = head.size() > 3 ? to_int(head[3], r.line()) : 0;
  if (nv <= 0) throw ParseError(r.line(), "vertex count must be positive (separate .node files are not supported)");
  if (dim != 2) throw ParseError(r.line(), "dimension must be 2");
  if (nattr < 0 || vmark < 0 || vmark > 1) throw ParseError(r.line(), "malformed vertex header");

  out.vertices.assign(static_cast<std::size_t>(nv), {});
  out.vertex_markers.assign(static_cast<std::size_t>(nv), 0);
  std::vector<char> seen(static_cast<std::size_t>(nv), 0);
  for (long long k = 0; k < nv; ++k) {
    auto t = r.expect("vertex line");
    const std::size_t ln = r.line();
    need(t, static_cast<std::size_t>(3 + nattr + vmark), ln, "vertex line");
    const long long id = to_int(t[0], ln);
    if (k == 0) {
      if (id != 0 && id != 1) throw ParseError(ln, "first vertex id must be 0 or 1");
      out.first_index = static_cast<int>(id);
    }
    const long long idx = id - out.first_index;
    if (idx < 0 || idx >= nv) throw ParseError(ln, "vertex id " + t[0] + " out of range");
    if (seen[idx]) throw ParseError(ln, "duplicate vertex id " + t[0]);
    seen[idx] = 1;
    out.vertices[idx] = {to_double(t[1], ln), to_double(t[2], ln)};
    if (vmark) out.vertex_markers[idx] = static_cast<int>(to_int(t[3 + nattr], ln));
  }

  auto shead = r.expect("segment header");
  const long long ns = to_int(shead[0], r.line());
  const long long smark = shead.size() > 1 ? to_int(shead[1], r.line()) : 0;
  if (ns < 0 || smark < 0 || smark > 1) throw ParseError(r.line(), "malformed segment header");
  for (long long k = 0; k < ns; ++k) {
    auto t = r.expect("segment line");
    const std::size_t ln = r.line();
    need(t, static_cast<std::size_t>(3 + smark), ln, "segment line");
    const long long a = to_int(t[1], ln) - out.first_index;
    const long long b = to_int(t[2], ln) - out.first_index;
    if (a < 0 || a >= nv || b < 0 || b >= nv) throw ParseError(ln, "segment endpoint out of range");
    const int marker = smark ? static_cast<int>(to_int(t[3], ln)) : 0;
    out.add_segment(static_cast<std::size_t>(a), static_cast<std::size_t>(b), marker);
  }

  if (auto hhead = r.next()) {
    const long long nh = to_int((*hhead)[0], r.line());
    if (nh < 0) throw ParseError(r.line(), "malformed hole header");
    for (long long k = 0; k < nh; ++k) {
      auto t = r.expect("hole line");
      need(t, 3, r.line(), "hole line");
      out.holes.push_back({to_double(t[1], r.line()), to_double(t[2], r.line())});
    }
  }
  // Regional attributes, if any, are ignored.
  return out;
}

Pslg parse_poly_string(const std::string& text) {
  std::istringstream in(text);
  return parse_poly(in);
}

Pslg read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_poly(in);
}

// ------------------------------------------------------------- validation

std::string Violation::message() const {
  const std::string a = std::to_string(first), b = std::to_string(second);
  switch (kind) {
    case ViolationKind::NoSegments: return "PSLG must contain at least one segment";
    case ViolationKind::NonFiniteVertex: return "vertex " + a + " has a non-finite coordinate";
    case ViolationKind::DuplicateVertex: return "vertices " + a + " and " + b + " coincide";
    case ViolationKind::IndexOutOfRange: return "segment " + a + " references a missing vertex";
    case ViolationKind::ZeroLengthSegment: return "segment " + a + " has zero length";
    case ViolationKind::DuplicateSegment: return "segments " + a + " and " + b + " are identical";
    case ViolationKind::CollinearOverlap: return "segments " + a + " and " + b + " overlap";
    case ViolationKind::VertexOnSegment: return "vertex " + a + " lies inside segment " + b;
    case ViolationKind::ProperIntersection: return "segments " + a + " and " + b + " intersect";
  }
  return "unknown violation";
}

std::vector<Violation> validate(const Pslg& pslg) {
  std::vector<Violation> out;
  const auto& v = pslg.vertices;
  const auto& segs = pslg.segments;
  if (segs.empty()) out.push_back({ViolationKind::NoSegments});

  for (std::size_t i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].x) || !std::isfinite(v[i].y)) out.push_back({ViolationKind::NonFiniteVertex, i});

  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(v[a], v[b]) || (v[a] == v[b] && a < b);
  });
  for (std::size_t k = 0; k < order.size();) {
    std::size_t j = k + 1;
    while (j < order.size() && v[order[j]] == v[order[k]]) {
      out.push_back({ViolationKind::DuplicateVertex, order[k], order[j]});
      ++j;
    }
    k = j;
  }

  std::vector<char> usable(segs.size(), 1);
  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (segs[s].a >= v.size() || segs[s].b >= v.size()) {
      out.push_back({ViolationKind::IndexOutOfRange, s});
      usable[s] = 0;
    } else if (segs[s].a == segs[s].b || v[segs[s].a] == v[segs[s].b]) {
      out.push_back({ViolationKind::ZeroLengthSegment, s});
      usable[s] = 0;
    }
  }

  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (!usable[s]) continue;
    const Point2 a = v[segs[s].a], b = v[segs[s].b];
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (pslg.has_endpoint(s, k)) continue;
      if (strictly_between(a, b, v[k])) out.push_back({ViolationKind::VertexOnSegment, k, s});
    }
  }

  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (!usable[s]) continue;
    for (std::size_t t = s + 1; t < segs.size(); ++t) {
      if (!usable[t]) continue;
      const std::size_t sa = segs[s].a, sb = segs[s].b, ta = segs[t].a, tb = segs[t].b;
      const bool share_a = sa == ta || sa == tb;
      const bool share_b = sb == ta || sb == tb;
      if (share_a && share_b) {
        out.push_back({ViolationKind::DuplicateSegment, s, t});
        continue;
      }
      const Point2 a = v[sa], b = v[sb], c = v[ta], d = v[tb];
      if (share_a || share_b) {
        const Point2 o = share_a ? a : b;
        const Point2 p = share_a ? b : a;
        const Point2 q = (share_a ? sa : sb) == ta ? d : c;
        if (orient2d(o, p, q) == 0 && dot_sign(o, p, q) > 0)
          out.push_back({ViolationKind::CollinearOverlap, s, t});
        continue;
      }
      if (segments_cross_properly(a, b, c, d)) {
        out.push_back({ViolationKind::ProperIntersection, s, t});
      } else if (orient2d(a, b, c) == 0 && orient2d(a, b, d) == 0 &&
                 (strictly_between(a, b, c) || strictly_between(a, b, d) || strictly_between(c, d, a) ||
                  strictly_between(c, d, b))) {
        out.push_back({ViolationKind::CollinearOverlap, s, t});
      }
    }
  }
  return out;
}

void require_valid(const Pslg& pslg) {
  const auto violations = validate(pslg);
  if (violations.empty()) return;
  std::string msg = violations.front().message();
  for (std::size_t i = 1; i < violations.size(); ++i) msg += "; " + violations[i].message();
  throw ValidationError(msg);
}

// ------------------------------------------------------------ small angles

double angle_between_adjacent(const Pslg& pslg, std::size_t s1, std::size_t s2) {
  const Segment& p = pslg.segments.at(s1);
  const Segment& q = pslg.segments.at(s2);
  std::size_t apex, u, w;
  if (p.a == q.a || p.a == q.b) {
    apex = p.a;
    u = p.b;
  } else if (p.b == q.a || p.b == q.b) {
    apex = p.b;
    u = p.a;
  } else {
    throw ValidationError("segments " + std::to_string(s1) + " and " + std::to_string(s2) + " are not adjacent");
  }
  w = q.a == apex ? q.b : q.a;
  if (u == w) throw ValidationError("segments share both endpoints");
  const Point2 du = pslg.vertices[u] - pslg.vertices[apex];
  const Point2 dw = pslg.vertices[w] - pslg.vertices[apex];
  return std::atan2(std::fabs(cross(du, dw)), dot(du, dw));
}

double small_angle_threshold(double ratio) {
  if (!(ratio >= 1.0)) throw ConfigError("radius ratio must be at least 1");
  return std::acos(1.0 / (2.0 * ratio));
}

std::vector<SmallAngleRecord> classify_small_angles(const Pslg& pslg, double ratio) {
  const double threshold = small_angle_threshold(ratio);
  std::vector<SmallAngleRecord> out;
  const auto inc = pslg.incidence();
  for (std::size_t apex = 0; apex < inc.size(); ++apex) {
    const auto& list = inc[apex];
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const double phi = angle_between_adjacent(pslg, list[i], list[j]);
        if (phi <= threshold) out.push_back({apex, {std::min(list[i], list[j]), std::max(list[i], list[j])}, phi});
      }
    }
  }
  return out;
}

}  // namespace frontmesh
