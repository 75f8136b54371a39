#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "convexcover/geom.hpp"

namespace convexcover {

// Thrown when a merge discovers more than two boundary crossings, i.e. the
// pseudo-disk precondition was violated by the caller.
struct PseudoDiskViolation : std::logic_error {
  explicit PseudoDiskViolation(const std::string& what) : std::logic_error(what) {}
};

struct MergeStats {
  int deleted_vertices = 0;   // vertices of the operands absent from the result
  int boundary_crossings = 0; // crossing points discovered (0 containment, else 2)
  bool used_rebuild = false;  // degenerate/tangent escape path taken
  std::vector<Segment> new_edges;  // result edges in neither operand, cycle-directed
};

struct DescentStats {
  int max_depth = 0;  // deepest recursion of the last intersect/clip descent
  int height = 0;     // max tree height among the chains involved
};

namespace detail {

struct ChainNode {
  Segment e;  // directed so that e.a < e.b lexicographically
  std::uint64_t pri = 0;
  ChainNode* l = nullptr;
  ChainNode* r = nullptr;
  ChainNode* prev = nullptr;   // in-order neighbors within the chain
  ChainNode* next = nullptr;
  ChainNode* first = nullptr;  // leftmost edge node in this subtree
  ChainNode* last = nullptr;   // rightmost edge node in this subtree
  int size = 1;
  int height = 1;
};

// One x-monotone convex chain: a treap of edges keyed by the lexicographic
// left endpoint, with subtree first/last pointers and an in-order linked list.
class Chain {
 public:
  Chain() = default;
  ~Chain() { clear(); }
  Chain(Chain&& o) noexcept : root_(o.root_) { o.root_ = nullptr; }
  Chain& operator=(Chain&& o) noexcept {
    if (this != &o) {
      clear();
      root_ = o.root_;
      o.root_ = nullptr;
    }
    return *this;
  }
  Chain(const Chain&) = delete;
  Chain& operator=(const Chain&) = delete;

  // edges must be consecutive and strictly key-increasing. O(n).
  static Chain from_edges(const std::vector<Segment>& edges);

  bool empty() const { return root_ == nullptr; }
  int size() const;
  int height() const;
  ChainNode* root() const { return root_; }
  ChainNode* first() const;
  ChainNode* last() const;

  // Some edge whose x-span [e.a.x, e.b.x] contains x; nullptr if none.
  ChainNode* find_spanning(const Rational& x) const;
  // Edge whose closed segment contains p; nullptr if none.
  ChainNode* find_containing(const Point& p) const;

  void insert(const Segment& e);
  void erase(ChainNode* n);

  // Split into edges with key < at and edges with key >= at.
  static std::pair<Chain, Chain> split(Chain c, const Point& at);
  // All keys of left must precede all keys of right.
  static Chain join(Chain left, Chain right);

  std::vector<Segment> edges() const;  // in order
  void clear();

 private:
  explicit Chain(ChainNode* r) : root_(r) {}
  ChainNode* root_ = nullptr;
};

}  // namespace detail

// A convex polygon maintained as two x-monotone chains (lower and upper),
// both running from the lexicographic minimum vertex to the lexicographic
// maximum vertex. Degenerate instances hold a single point or a segment
// (the segment's edge is stored in both chains).
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  ConvexPolygon(ConvexPolygon&&) noexcept = default;
  ConvexPolygon& operator=(ConvexPolygon&&) noexcept = default;

  // hull_ccw: strictly convex counterclockwise ring, or a degenerate ring of
  // 1-2 distinct points. Throws std::invalid_argument otherwise.
  static ConvexPolygon build(const Ring& hull_ccw, int id);

  int id() const { return id_; }
  void set_id(int id) { id_ = id; }
  int vertex_count() const { return nverts_; }
  bool degenerate() const { return nverts_ < 3; }
  const Point& leftmost() const { return left_; }
  const Point& rightmost() const { return right_; }

  // Counterclockwise ring starting at the leftmost vertex (sizes 1-2 for
  // degenerates). O(n).
  Ring vertices() const;

  // Boundary edges with their chain side; lower first. O(n).
  std::vector<Segment> lower_edges() const { return lower_.edges(); }
  std::vector<Segment> upper_edges() const { return upper_.edges(); }

  bool contains(const Point& p) const;  // closed

  // A point of the closed intersection with other, if any. O(log^2-ish);
  // instrumented descent depth <= 2 * (tree height + 1).
  std::optional<Point> intersection_witness(const ConvexPolygon& other,
                                            DescentStats* stats = nullptr) const;

  // Extreme points of the closed intersection with the infinite line through
  // l1, l2 (l1 != l2), ordered along l2 - l1; equal when tangent. O(log n).
  std::optional<std::pair<Point, Point>> clip_line(const Point& l1, const Point& l2,
                                                   DescentStats* stats = nullptr) const;

  // Hull of the union of two intersecting pseudo-disks (boundaries crossing
  // at most twice). Consumes both operands; result takes a's id.
  // O((1 + u) log n) on the walk path, u = deleted vertices.
  static ConvexPolygon merge(ConvexPolygon a, ConvexPolygon b, MergeStats* stats = nullptr);

 private:
  int id_ = -1;
  int nverts_ = 0;
  Point left_, right_;
  detail::Chain lower_, upper_;

  friend struct MergeImpl;
};

}  // namespace convexcover
