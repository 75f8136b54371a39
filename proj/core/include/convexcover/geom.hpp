#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <vector>

#include "convexcover/rational.hpp"

namespace convexcover {

struct Point {
  Rational x, y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  // Lexicographic: by x, ties by y.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    const auto cx = a.x <=> b.x;
    return cx != std::strong_ordering::equal ? cx : a.y <=> b.y;
  }
  friend std::ostream& operator<<(std::ostream& os, const Point& p);
};

struct Segment {
  Point a, b;

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
  friend std::ostream& operator<<(std::ostream& os, const Segment& s);
};

// A simple polygon is a vector<Point> ring, counterclockwise, no repeated
// vertex, edges meeting only at shared endpoints of consecutive edges.
using Ring = std::vector<Point>;

enum class Orient : int { clockwise = -1, collinear = 0, counterclockwise = 1 };

// (b - o) x (c - o)
Rational cross(const Point& o, const Point& b, const Point& c);
Orient orient(const Point& p, const Point& q, const Point& r);

bool on_segment(const Point& p, const Segment& s);  // closed

struct SegmentIntersection {
  enum class Kind { none, point, overlap };
  Kind kind = Kind::none;
  Point p;       // set when kind == point
  Segment span;  // set when kind == overlap; span.a lexicographically <= span.b
};

// Exact closed-set intersection of two segments (either may be degenerate).
SegmentIntersection segment_intersect(const Segment& s, const Segment& t);

// Intersection point of the two infinite lines a1a2 and b1b2;
// nullopt when parallel (including coincident).
std::optional<Point> line_line_intersection(const Point& a1, const Point& a2,
                                            const Point& b1, const Point& b2);

// Strictly convex hull, counterclockwise, starting at the lexicographic
// minimum. Collinear points are dropped. Degenerate inputs yield rings of
// size 0, 1 or 2 (distinct extreme points of a collinear set).
Ring convex_hull(std::vector<Point> pts);

Rational polygon_area(const Ring& ring);  // signed; counterclockwise > 0

bool is_simple_polygon(const Ring& ring);

enum class Containment { outside, boundary, inside };
Containment point_in_simple_polygon(const Point& p, const Ring& ring);

// Closed-set disjointness of two simple polygons.
bool polygons_disjoint(const Ring& a, const Ring& b);

// Closed containment in a convex ring (counterclockwise; degenerate rings of
// size 1-2 mean a point or a segment, membership reported as boundary).
Containment point_in_convex_ring(const Point& p, const Ring& ring);

// Some point of the closed intersection of two convex rings, by brute force
// over vertices and edge pairs. O(|a| * |b|).
std::optional<Point> convex_rings_intersection_witness(const Ring& a, const Ring& b);

}  // namespace convexcover
