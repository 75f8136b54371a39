#include "convexcover/geom.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace convexcover {

std::string Rational::str() const {
  std::ostringstream os;
  os << q_;
  return os.str();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto to_int = [](std::string_view s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), std::string(s).c_str(), 10) != 0)
      throw std::invalid_argument("Rational::parse: bad integer literal");
    return v;
  };
  if (slash == std::string_view::npos) return Rational(to_int(text));
  return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.raw(); }

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

std::ostream& operator<<(std::ostream& os, const Segment& s) {
  return os << "[" << s.a << " - " << s.b << "]";
}

Rational cross(const Point& o, const Point& b, const Point& c) {
  return (b.x - o.x) * (c.y - o.y) - (b.y - o.y) * (c.x - o.x);
}

Orient orient(const Point& p, const Point& q, const Point& r) {
  switch (cross(p, q, r).sign()) {
    case 1: return Orient::counterclockwise;
    case -1: return Orient::clockwise;
    default: return Orient::collinear;
  }
}

bool on_segment(const Point& p, const Segment& s) {
  if (orient(s.a, s.b, p) != Orient::collinear) return false;
  return min(s.a.x, s.b.x) <= p.x && p.x <= max(s.a.x, s.b.x) &&
         min(s.a.y, s.b.y) <= p.y && p.y <= max(s.a.y, s.b.y);
}

std::optional<Point> line_line_intersection(const Point& a1, const Point& a2,
                                            const Point& b1, const Point& b2) {
  const Rational d1x = a2.x - a1.x, d1y = a2.y - a1.y;
  const Rational d2x = b2.x - b1.x, d2y = b2.y - b1.y;
  const Rational den = d1x * d2y - d1y * d2x;
  if (den.sign() == 0) return std::nullopt;
  const Rational t = ((b1.x - a1.x) * d2y - (b1.y - a1.y) * d2x) / den;
  return Point{a1.x + t * d1x, a1.y + t * d1y};
}

namespace {

// Overlap of two collinear segments, as closed sets.
SegmentIntersection collinear_overlap(const Segment& s, const Segment& t) {
  Point slo = s.a, shi = s.b;
  if (shi < slo) std::swap(slo, shi);
  Point tlo = t.a, thi = t.b;
  if (thi < tlo) std::swap(tlo, thi);
  const Point lo = std::max(slo, tlo);
  const Point hi = std::min(shi, thi);
  SegmentIntersection out;
  if (hi < lo) return out;
  if (lo == hi) {
    out.kind = SegmentIntersection::Kind::point;
    out.p = lo;
  } else {
    out.kind = SegmentIntersection::Kind::overlap;
    out.span = Segment{lo, hi};
  }
  return out;
}

}  // namespace

SegmentIntersection segment_intersect(const Segment& s, const Segment& t) {
  SegmentIntersection out;
  const bool s_degenerate = s.a == s.b;
  const bool t_degenerate = t.a == t.b;
  if (s_degenerate && t_degenerate) {
    if (s.a == t.a) {
      out.kind = SegmentIntersection::Kind::point;
      out.p = s.a;
    }
    return out;
  }
  if (s_degenerate || t_degenerate) {
    const Point& p = s_degenerate ? s.a : t.a;
    const Segment& seg = s_degenerate ? t : s;
    if (on_segment(p, seg)) {
      out.kind = SegmentIntersection::Kind::point;
      out.p = p;
    }
    return out;
  }

  const Orient o1 = orient(s.a, s.b, t.a);
  const Orient o2 = orient(s.a, s.b, t.b);
  const Orient o3 = orient(t.a, t.b, s.a);
  const Orient o4 = orient(t.a, t.b, s.b);

  if (o1 == Orient::collinear && o2 == Orient::collinear)
    return collinear_overlap(s, t);

  const auto opposite = [](Orient a, Orient b) {
    return static_cast<int>(a) * static_cast<int>(b) < 0;
  };
  if (opposite(o1, o2) && opposite(o3, o4)) {  // proper crossing
    const auto p = line_line_intersection(s.a, s.b, t.a, t.b);
    out.kind = SegmentIntersection::Kind::point;
    out.p = *p;
    return out;
  }
  // Improper: an endpoint of one lies on the other.
  for (const Point& p : {t.a, t.b}) {
    if (on_segment(p, s) && on_segment(p, t)) {
      out.kind = SegmentIntersection::Kind::point;
      out.p = p;
      return out;
    }
  }
  for (const Point& p : {s.a, s.b}) {
    if (on_segment(p, s) && on_segment(p, t)) {
      out.kind = SegmentIntersection::Kind::point;
      out.p = p;
      return out;
    }
  }
  return out;
}

Ring convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;

  // Monotone chain keeping only strict turns.
  std::vector<Point> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) != Orient::counterclockwise) --k;
    hull[k++] = pts[i];
  }
  const size_t lower_end = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper
    while (k >= lower_end && orient(hull[k - 2], hull[k - 1], pts[i]) != Orient::counterclockwise) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point == first point
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

Rational polygon_area(const Ring& ring) {
  Rational two_a = 0;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    two_a += p.x * q.y - q.x * p.y;
  }
  return two_a / 2;
}

bool is_simple_polygon(const Ring& ring) {
  const size_t n = ring.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (ring[i] == ring[j]) return false;

  for (size_t i = 0; i < n; ++i) {
    const Segment ei{ring[i], ring[(i + 1) % n]};
    for (size_t j = i + 1; j < n; ++j) {
      const Segment ej{ring[j], ring[(j + 1) % n]};
      const auto isect = segment_intersect(ei, ej);
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        if (isect.kind != SegmentIntersection::Kind::point) return false;
        const Point& shared = (j == i + 1) ? ring[j] : ring[0];
        if (!(isect.p == shared)) return false;
      } else if (isect.kind != SegmentIntersection::Kind::none) {
        return false;
      }
    }
  }
  return true;
}

Containment point_in_simple_polygon(const Point& p, const Ring& ring) {
  const size_t n = ring.size();
  int crossings = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    if (on_segment(p, Segment{a, b})) return Containment::boundary;
    const bool a_below = a.y <= p.y;
    const bool b_below = b.y <= p.y;
    if (a_below != b_below) {
      const Orient o = orient(a, b, p);
      if (!a_below) {  // downward edge
        if (o == Orient::clockwise) ++crossings;
      } else {  // upward edge
        if (o == Orient::counterclockwise) ++crossings;
      }
    }
  }
  return (crossings % 2 == 1) ? Containment::inside : Containment::outside;
}

bool polygons_disjoint(const Ring& a, const Ring& b) {
  const size_t n = a.size(), m = b.size();
  // Disjoint bounding boxes settle most pairs without rational edge tests.
  const auto xless = [](const Point& p, const Point& q) { return p.x < q.x; };
  const auto yless = [](const Point& p, const Point& q) { return p.y < q.y; };
  if (std::max_element(a.begin(), a.end(), xless)->x <
          std::min_element(b.begin(), b.end(), xless)->x ||
      std::max_element(b.begin(), b.end(), xless)->x <
          std::min_element(a.begin(), a.end(), xless)->x ||
      std::max_element(a.begin(), a.end(), yless)->y <
          std::min_element(b.begin(), b.end(), yless)->y ||
      std::max_element(b.begin(), b.end(), yless)->y <
          std::min_element(a.begin(), a.end(), yless)->y)
    return true;
  for (size_t i = 0; i < n; ++i) {
    const Segment ea{a[i], a[(i + 1) % n]};
    for (size_t j = 0; j < m; ++j) {
      const Segment eb{b[j], b[(j + 1) % m]};
      if (segment_intersect(ea, eb).kind != SegmentIntersection::Kind::none)
        return false;
    }
  }
  if (point_in_simple_polygon(a[0], b) != Containment::outside) return false;
  if (point_in_simple_polygon(b[0], a) != Containment::outside) return false;
  return true;
}

Containment point_in_convex_ring(const Point& p, const Ring& ring) {
  const size_t n = ring.size();
  if (n == 0) return Containment::outside;
  if (n == 1) return p == ring[0] ? Containment::boundary : Containment::outside;
  if (n == 2)
    return on_segment(p, {ring[0], ring[1]}) ? Containment::boundary : Containment::outside;
  for (size_t i = 0; i < n; ++i) {
    const Orient o = orient(ring[i], ring[(i + 1) % n], p);
    if (o == Orient::clockwise) return Containment::outside;
    // Edge lines support the polygon: on the line means on the edge or out.
    if (o == Orient::collinear)
      return on_segment(p, {ring[i], ring[(i + 1) % n]}) ? Containment::boundary
                                                         : Containment::outside;
  }
  return Containment::inside;
}

namespace {

std::vector<Segment> ring_edges(const Ring& r) {
  if (r.size() < 2) return {};
  if (r.size() == 2) return {{r[0], r[1]}};
  std::vector<Segment> es;
  es.reserve(r.size());
  for (size_t i = 0; i < r.size(); ++i) es.push_back({r[i], r[(i + 1) % r.size()]});
  return es;
}

}  // namespace

std::optional<Point> convex_rings_intersection_witness(const Ring& a, const Ring& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  for (const Point& v : a)
    if (point_in_convex_ring(v, b) != Containment::outside) return v;
  for (const Point& v : b)
    if (point_in_convex_ring(v, a) != Containment::outside) return v;
  for (const Segment& ea : ring_edges(a))
    for (const Segment& eb : ring_edges(b)) {
      const SegmentIntersection si = segment_intersect(ea, eb);
      if (si.kind == SegmentIntersection::Kind::point) return si.p;
      if (si.kind == SegmentIntersection::Kind::overlap) return si.span.a;
    }
  return std::nullopt;
}

}  // namespace convexcover
