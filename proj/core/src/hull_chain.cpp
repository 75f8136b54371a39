#include "convexcover/hull_chain.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace convexcover {
namespace detail {
namespace {

std::uint64_t next_pri() {
  // splitmix64; deterministic priorities make treap shapes reproducible
  static std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int sz(const ChainNode* n) { return n ? n->size : 0; }
int ht(const ChainNode* n) { return n ? n->height : 0; }

void pull(ChainNode* n) {
  n->size = 1 + sz(n->l) + sz(n->r);
  n->height = 1 + std::max(ht(n->l), ht(n->r));
  n->first = n->l ? n->l->first : n;
  n->last = n->r ? n->r->last : n;
}

// left: keys < at; right: keys >= at
void split_raw(ChainNode* t, const Point& at, ChainNode*& l, ChainNode*& r) {
  if (!t) {
    l = r = nullptr;
    return;
  }
  if (t->e.a < at) {
    split_raw(t->r, at, t->r, r);
    pull(t);
    l = t;
  } else {
    split_raw(t->l, at, l, t->l);
    pull(t);
    r = t;
  }
}

ChainNode* join_raw(ChainNode* a, ChainNode* b) {
  if (!a) return b;
  if (!b) return a;
  if (a->pri > b->pri) {
    a->r = join_raw(a->r, b);
    pull(a);
    return a;
  }
  b->l = join_raw(a, b->l);
  pull(b);
  return b;
}

ChainNode* insert_rec(ChainNode* t, ChainNode* n) {
  if (!t) return n;
  if (n->pri > t->pri) {
    split_raw(t, n->e.a, n->l, n->r);
    pull(n);
    return n;
  }
  if (n->e.a < t->e.a)
    t->l = insert_rec(t->l, n);
  else
    t->r = insert_rec(t->r, n);
  pull(t);
  return t;
}

ChainNode* remove_rec(ChainNode* t, const Point& key) {
  if (!t) throw std::logic_error("hull_chain: erase of absent edge");
  if (key == t->e.a) {
    ChainNode* j = join_raw(t->l, t->r);
    delete t;
    return j;
  }
  if (key < t->e.a)
    t->l = remove_rec(t->l, key);
  else
    t->r = remove_rec(t->r, key);
  pull(t);
  return t;
}

}  // namespace

Chain Chain::from_edges(const std::vector<Segment>& edges) {
  std::vector<ChainNode*> spine;
  ChainNode* prev = nullptr;
  for (const Segment& e : edges) {
    if (!(e.a < e.b)) throw std::logic_error("hull_chain: edge not lexicographically oriented");
    if (prev && !(prev->e.a < e.a)) throw std::logic_error("hull_chain: edges out of order");
    ChainNode* n = new ChainNode{e, next_pri()};
    n->first = n->last = n;
    ChainNode* popped = nullptr;
    while (!spine.empty() && spine.back()->pri < n->pri) {
      popped = spine.back();
      pull(popped);
      spine.pop_back();
    }
    n->l = popped;
    if (!spine.empty()) spine.back()->r = n;
    spine.push_back(n);
    n->prev = prev;
    if (prev) prev->next = n;
    prev = n;
  }
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) pull(*it);
  return spine.empty() ? Chain() : Chain(spine.front());
}

int Chain::size() const { return sz(root_); }
int Chain::height() const { return ht(root_); }
ChainNode* Chain::first() const { return root_ ? root_->first : nullptr; }
ChainNode* Chain::last() const { return root_ ? root_->last : nullptr; }

ChainNode* Chain::find_spanning(const Rational& x) const {
  // both e.a.x and e.b.x are non-decreasing along the chain
  ChainNode* cur = root_;
  while (cur) {
    if (x < cur->e.a.x)
      cur = cur->l;
    else if (x > cur->e.b.x)
      cur = cur->r;
    else
      return cur;
  }
  return nullptr;
}

ChainNode* Chain::find_containing(const Point& p) const {
  ChainNode* c = find_spanning(p.x);
  if (!c) return nullptr;
  // at most three edges of one chain touch a given x; probe the neighborhood
  ChainNode* n = c;
  for (int i = 0; i < 3 && n; ++i, n = n->prev)
    if (on_segment(p, n->e)) return n;
  n = c->next;
  for (int i = 0; i < 2 && n; ++i, n = n->next)
    if (on_segment(p, n->e)) return n;
  return nullptr;
}

void Chain::insert(const Segment& e) {
  if (!(e.a < e.b)) throw std::logic_error("hull_chain: edge not lexicographically oriented");
  ChainNode* n = new ChainNode{e, next_pri()};
  n->first = n->last = n;
  ChainNode* pred = nullptr;
  for (ChainNode* cur = root_; cur;)
    if (cur->e.a < e.a) {
      pred = cur;
      cur = cur->r;
    } else {
      cur = cur->l;
    }
  ChainNode* succ = pred ? pred->next : (root_ ? root_->first : nullptr);
  n->prev = pred;
  n->next = succ;
  if (pred) pred->next = n;
  if (succ) succ->prev = n;
  root_ = insert_rec(root_, n);
}

void Chain::erase(ChainNode* n) {
  if (n->prev) n->prev->next = n->next;
  if (n->next) n->next->prev = n->prev;
  root_ = remove_rec(root_, n->e.a);
}

std::pair<Chain, Chain> Chain::split(Chain c, const Point& at) {
  ChainNode* l = nullptr;
  ChainNode* r = nullptr;
  split_raw(c.root_, at, l, r);
  c.root_ = nullptr;
  if (l && r) {
    l->last->next = nullptr;
    r->first->prev = nullptr;
  }
  return {Chain(l), Chain(r)};
}

Chain Chain::join(Chain left, Chain right) {
  if (left.root_ && right.root_) {
    if (!(left.root_->last->e.a < right.root_->first->e.a))
      throw std::logic_error("hull_chain: join order violation");
    left.root_->last->next = right.root_->first;
    right.root_->first->prev = left.root_->last;
  }
  ChainNode* j = join_raw(left.root_, right.root_);
  left.root_ = right.root_ = nullptr;
  return Chain(j);
}

std::vector<Segment> Chain::edges() const {
  std::vector<Segment> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (ChainNode* n = first(); n; n = n->next) out.push_back(n->e);
  return out;
}

void Chain::clear() {
  std::vector<ChainNode*> stack;
  if (root_) stack.push_back(root_);
  while (!stack.empty()) {
    ChainNode* n = stack.back();
    stack.pop_back();
    if (n->l) stack.push_back(n->l);
    if (n->r) stack.push_back(n->r);
    delete n;
  }
  root_ = nullptr;
}

}  // namespace detail

using detail::Chain;
using detail::ChainNode;

// ---------------------------------------------------------------------------
// construction and point queries
// ---------------------------------------------------------------------------

ConvexPolygon ConvexPolygon::build(const Ring& hull_ccw, int id) {
  ConvexPolygon p;
  p.id_ = id;
  const std::size_t n = hull_ccw.size();
  if (n == 0) throw std::invalid_argument("hull_chain: empty ring");
  if (n == 1) {
    p.nverts_ = 1;
    p.left_ = p.right_ = hull_ccw[0];
    return p;
  }
  if (n == 2) {
    if (hull_ccw[0] == hull_ccw[1]) throw std::invalid_argument("hull_chain: repeated point");
    p.nverts_ = 2;
    p.left_ = std::min(hull_ccw[0], hull_ccw[1]);
    p.right_ = std::max(hull_ccw[0], hull_ccw[1]);
    const Segment e{p.left_, p.right_};
    p.lower_ = Chain::from_edges({e});
    p.upper_ = Chain::from_edges({e});
    return p;
  }
  std::size_t imin = 0, imax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(hull_ccw[i], hull_ccw[(i + 1) % n], hull_ccw[(i + 2) % n]) !=
        Orient::counterclockwise)
      throw std::invalid_argument("hull_chain: ring is not strictly convex counterclockwise");
    if (hull_ccw[i] < hull_ccw[imin]) imin = i;
    if (hull_ccw[imax] < hull_ccw[i]) imax = i;
  }
  std::vector<Segment> lo, up;
  for (std::size_t i = imin; i != imax; i = (i + 1) % n)
    lo.push_back({hull_ccw[i], hull_ccw[(i + 1) % n]});
  for (std::size_t i = imax; i != imin; i = (i + 1) % n)
    up.push_back({hull_ccw[(i + 1) % n], hull_ccw[i]});
  std::reverse(up.begin(), up.end());
  p.nverts_ = static_cast<int>(n);
  p.left_ = hull_ccw[imin];
  p.right_ = hull_ccw[imax];
  p.lower_ = Chain::from_edges(lo);  // from_edges re-checks monotone order
  p.upper_ = Chain::from_edges(up);
  return p;
}

Ring ConvexPolygon::vertices() const {
  if (nverts_ == 0) return {};
  if (nverts_ == 1) return {left_};
  if (nverts_ == 2) return {left_, right_};
  Ring r;
  r.reserve(static_cast<std::size_t>(nverts_));
  for (ChainNode* n = lower_.first(); n; n = n->next) r.push_back(n->e.a);
  r.push_back(right_);
  for (ChainNode* n = upper_.last(); n && n != upper_.first(); n = n->prev) r.push_back(n->e.a);
  return r;
}

bool ConvexPolygon::contains(const Point& p) const {
  if (nverts_ == 0) return false;
  if (nverts_ == 1) return p == left_;
  if (nverts_ == 2) return on_segment(p, {left_, right_});
  if (p.x < left_.x || right_.x < p.x) return false;
  const ChainNode* lo = lower_.find_spanning(p.x);
  const ChainNode* up = upper_.find_spanning(p.x);
  if (!lo || !up) throw std::logic_error("hull_chain: chain does not span its x-range");
  // every chain edge's line supports the polygon
  const Orient olo = orient(lo->e.a, lo->e.b, p);
  if (olo == Orient::collinear) return on_segment(p, lo->e);
  if (olo == Orient::clockwise) return false;  // below the lower chain
  const Orient oup = orient(up->e.a, up->e.b, p);
  if (oup == Orient::collinear) return on_segment(p, up->e);
  return oup == Orient::clockwise;  // inside iff below the upper chain
}

// ---------------------------------------------------------------------------
// chain-pair intersection descent
// ---------------------------------------------------------------------------

namespace {

// Inner approximation of a subtree: hull of the endpoints of the extreme
// edges and the root edge (at most six points, always inside the region).
Ring inner_ring(const ChainNode* n) {
  return convex_hull({n->first->e.a, n->first->e.b, n->e.a, n->e.b, n->last->e.a, n->last->e.b});
}

struct Ear {
  const ChainNode* child = nullptr;
  Ring tri;  // covers the region part beyond the inner ring on this side
};

// Each child's whole region (the hull of its subarc, extreme edges included)
// lies in a triangle bounded by the extreme-edge line, the node-edge line and
// the chord between the subarc's endpoints.  The extreme-edge endpoints and
// the line intersection are collinear, so three points span the triangle.
std::optional<Ear> make_ear(const ChainNode* n, bool left_side) {
  const ChainNode* child = left_side ? n->l : n->r;
  if (!child) return std::nullopt;
  const Segment& em = left_side ? n->first->e : n->last->e;
  const auto apex = line_line_intersection(em.a, em.b, n->e.a, n->e.b);
  if (!apex) throw std::logic_error("hull_chain: parallel edges within one chain");
  Ring tri = left_side ? convex_hull({em.a, *apex, n->e.a}) : convex_hull({n->e.b, *apex, em.b});
  return Ear{child, std::move(tri)};
}

void note_depth(DescentStats* st, int depth) {
  if (st && depth > st->max_depth) st->max_depth = depth;
}

std::optional<Point> descend(const ChainNode* a, const ChainNode* b, int depth, DescentStats* st) {
  note_depth(st, depth);
  const Ring ia = inner_ring(a);
  const Ring ib = inner_ring(b);
  if (auto w = convex_rings_intersection_witness(ia, ib)) return w;
  const std::optional<Ear> ea[2] = {make_ear(a, true), make_ear(a, false)};
  const std::optional<Ear> eb[2] = {make_ear(b, true), make_ear(b, false)};
  for (const auto& e : ea)
    if (e && convex_rings_intersection_witness(e->tri, ib))
      if (auto w = descend(e->child, b, depth + 1, st)) return w;
  for (const auto& e : eb)
    if (e && convex_rings_intersection_witness(ia, e->tri))
      if (auto w = descend(a, e->child, depth + 1, st)) return w;
  for (const auto& u : ea)
    for (const auto& v : eb)
      if (u && v && convex_rings_intersection_witness(u->tri, v->tri))
        if (auto w = descend(u->child, v->child, depth + 1, st)) return w;
  return std::nullopt;
}

// witness for a segment against an arbitrary polygon
std::optional<Point> segment_witness(const Point& a, const Point& b, const ConvexPolygon& P) {
  if (P.contains(a)) return a;
  if (P.contains(b)) return b;
  const auto clip = P.clip_line(a, b);
  if (!clip) return std::nullopt;
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  const auto proj = [&](const Point& p) { return dx * p.x + dy * p.y; };
  const Rational lo = proj(clip->first);
  if (proj(a) <= lo && lo <= proj(b)) return clip->first;
  return std::nullopt;
}

}  // namespace

std::optional<Point> ConvexPolygon::intersection_witness(const ConvexPolygon& other,
                                                         DescentStats* st) const {
  if (st) *st = DescentStats{};
  if (nverts_ == 0 || other.nverts_ == 0) return std::nullopt;
  if (nverts_ == 1) return other.contains(left_) ? std::optional<Point>(left_) : std::nullopt;
  if (other.nverts_ == 1)
    return contains(other.left_) ? std::optional<Point>(other.left_) : std::nullopt;
  if (nverts_ == 2) return segment_witness(left_, right_, other);
  if (other.nverts_ == 2) return segment_witness(other.left_, other.right_, *this);
  if (st)
    st->height = std::max(std::max(lower_.height(), upper_.height()),
                          std::max(other.lower_.height(), other.upper_.height()));
  // the chord from leftmost to rightmost splits each polygon into the convex
  // hulls of its two chains, so four chain pairs cover every intersection
  const ChainNode* mine[2] = {lower_.root(), upper_.root()};
  const ChainNode* theirs[2] = {other.lower_.root(), other.upper_.root()};
  for (const ChainNode* a : mine)
    for (const ChainNode* b : theirs)
      if (auto w = descend(a, b, 1, st)) return w;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// line clipping
// ---------------------------------------------------------------------------

namespace {

bool line_meets_ring(const Point& l1, const Point& l2, const Ring& ring) {
  bool pos = false, neg = false;
  for (const Point& v : ring) {
    const Orient o = orient(l1, l2, v);
    if (o == Orient::collinear) return true;
    (o == Orient::counterclockwise ? pos : neg) = true;
    if (pos && neg) return true;
  }
  return false;
}

void clip_rec(const ChainNode* t, const Point& l1, const Point& l2, std::vector<Point>& hits,
              int depth, DescentStats* st) {
  note_depth(st, depth);
  const int s1 = static_cast<int>(orient(l1, l2, t->e.a));
  const int s2 = static_cast<int>(orient(l1, l2, t->e.b));
  if (s1 == 0) hits.push_back(t->e.a);
  if (s2 == 0) hits.push_back(t->e.b);
  if (s1 * s2 < 0) {
    const auto p = line_line_intersection(l1, l2, t->e.a, t->e.b);
    if (!p) throw std::logic_error("hull_chain: crossing edge parallel to line");
    hits.push_back(*p);
  }
  for (const bool left_side : {true, false}) {
    const auto ear = make_ear(t, left_side);
    if (ear && line_meets_ring(l1, l2, ear->tri)) clip_rec(ear->child, l1, l2, hits, depth + 1, st);
  }
}

}  // namespace

std::optional<std::pair<Point, Point>> ConvexPolygon::clip_line(const Point& l1, const Point& l2,
                                                                DescentStats* st) const {
  if (l1 == l2) throw std::invalid_argument("clip_line: coincident defining points");
  if (st) *st = DescentStats{};
  if (nverts_ == 0) return std::nullopt;
  const Rational dx = l2.x - l1.x, dy = l2.y - l1.y;
  const auto proj = [&](const Point& p) { return dx * p.x + dy * p.y; };
  if (nverts_ == 1) {
    if (orient(l1, l2, left_) != Orient::collinear) return std::nullopt;
    return std::make_pair(left_, left_);
  }
  if (nverts_ == 2) {
    const int s1 = static_cast<int>(orient(l1, l2, left_));
    const int s2 = static_cast<int>(orient(l1, l2, right_));
    if (s1 == 0 && s2 == 0)
      return proj(left_) <= proj(right_) ? std::make_pair(left_, right_)
                                         : std::make_pair(right_, left_);
    if (s1 == 0) return std::make_pair(left_, left_);
    if (s2 == 0) return std::make_pair(right_, right_);
    if (s1 * s2 < 0) {
      const auto p = line_line_intersection(l1, l2, left_, right_);
      if (!p) throw std::logic_error("hull_chain: crossing segment parallel to line");
      return std::make_pair(*p, *p);
    }
    return std::nullopt;
  }
  if (st) st->height = std::max(lower_.height(), upper_.height());
  std::vector<Point> hits;
  clip_rec(lower_.root(), l1, l2, hits, 1, st);
  clip_rec(upper_.root(), l1, l2, hits, 1, st);
  if (hits.empty()) return std::nullopt;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (proj(hits[i]) < proj(hits[lo])) lo = i;
    if (proj(hits[hi]) < proj(hits[i])) hi = i;
  }
  return std::make_pair(hits[lo], hits[hi]);
}

// ---------------------------------------------------------------------------
// merge
// ---------------------------------------------------------------------------

struct MergeImpl {
  struct Cursor {
    ChainNode* node = nullptr;
    bool on_lower = false;
    bool operator==(const Cursor&) const = default;
  };

  // ccw traversal: lower chain left-to-right, then upper chain right-to-left
  static const Point& from_v(const Cursor& c) { return c.on_lower ? c.node->e.a : c.node->e.b; }
  static const Point& to_v(const Cursor& c) { return c.on_lower ? c.node->e.b : c.node->e.a; }

  static Cursor next_ccw(const ConvexPolygon& P, const Cursor& c) {
    if (c.on_lower)
      return c.node->next ? Cursor{c.node->next, true} : Cursor{P.upper_.last(), false};
    return c.node->prev ? Cursor{c.node->prev, false} : Cursor{P.lower_.first(), true};
  }

  static Cursor prev_ccw(const ConvexPolygon& P, const Cursor& c) {
    if (c.on_lower)
      return c.node->prev ? Cursor{c.node->prev, true} : Cursor{P.upper_.first(), false};
    return c.node->next ? Cursor{c.node->next, false} : Cursor{P.lower_.last(), true};
  }

  static Cursor containing_cursor(const ConvexPolygon& P, const Point& p) {
    if (ChainNode* n = P.lower_.find_containing(p)) return {n, true};
    if (ChainNode* n = P.upper_.find_containing(p)) return {n, false};
    throw std::logic_error("merge: expected boundary point not found");
  }

  struct Walk {
    bool wrapped = false;
    Cursor stop;
    Point crossing;
    std::vector<Cursor> arc;  // inner-arc edges visited, including the stop edge
    int deleted = 0;
  };

  // advance ccw from start while the ccw head vertex lies in Q (closed)
  static Walk walk_forward(const ConvexPolygon& P, const ConvexPolygon& Q, Cursor start) {
    Walk w;
    Cursor c = start;
    while (true) {
      w.arc.push_back(c);
      if (!Q.contains(to_v(c))) break;
      if (++w.deleted > P.vertex_count()) {
        w.wrapped = true;
        return w;
      }
      c = next_ccw(P, c);
    }
    w.stop = c;
    const auto clip = Q.clip_line(from_v(c), to_v(c));
    if (!clip) throw std::logic_error("merge: stop edge misses the other polygon");
    w.crossing = clip->second;
    return w;
  }

  static Walk walk_backward(const ConvexPolygon& P, const ConvexPolygon& Q, Cursor start) {
    Walk w;
    Cursor c = start;
    while (true) {
      w.arc.push_back(c);
      if (!Q.contains(from_v(c))) break;
      if (++w.deleted > P.vertex_count()) {
        w.wrapped = true;
        return w;
      }
      c = prev_ccw(P, c);
    }
    w.stop = c;
    const auto clip = Q.clip_line(to_v(c), from_v(c));
    if (!clip) throw std::logic_error("merge: stop edge misses the other polygon");
    w.crossing = clip->second;
    return w;
  }

  // Lazy vertex sequence along one side of a junction, walking the surviving
  // arc of polygon S away from the junction. cursors[k] carries verts[k].
  struct Gen {
    const ConvexPolygon* S = nullptr;
    bool forward = false;  // true: next_ccw of to-vertices; false: prev_ccw of from-vertices
    Point last_valid;      // final vertex of the surviving arc in this direction
    int* emitted = nullptr;
    int cap = 0;
    std::vector<Cursor> cursors;
    std::vector<Point> verts;

    bool ensure(std::size_t k, Cursor start) {
      while (verts.size() <= k) {
        if (!verts.empty() && verts.back() == last_valid) return false;  // arc exhausted
        if (*emitted >= cap) return false;
        const Cursor c = cursors.empty()
                             ? start
                             : (forward ? next_ccw(*S, cursors.back()) : prev_ccw(*S, cursors.back()));
        cursors.push_back(c);
        verts.push_back(forward ? to_v(c) : from_v(c));
        ++*emitted;
      }
      return true;
    }
  };

  // Remove the junction point and pop non-convex vertices on both sides.
  // false means the configuration is tangent or an arc ran out: caller rebuilds.
  static bool settle_junction(const Point& x, Gen& left, Cursor lstart, Gen& right, Cursor rstart,
                              std::size_t& li, std::size_t& ri) {
    if (!left.ensure(0, lstart) || !right.ensure(0, rstart)) return false;
    li = ri = 0;
    // a proper transversal crossing is never strictly convex on the union hull
    if (orient(left.verts[0], x, right.verts[0]) == Orient::counterclockwise) return false;
    while (true) {
      if (!left.ensure(li + 1, lstart)) return false;
      if (orient(left.verts[li + 1], left.verts[li], right.verts[ri]) !=
          Orient::counterclockwise) {
        ++li;
        continue;
      }
      if (!right.ensure(ri + 1, rstart)) return false;
      if (orient(left.verts[li], right.verts[ri], right.verts[ri + 1]) !=
          Orient::counterclockwise) {
        ++ri;
        continue;
      }
      return true;
    }
  }

  // O(n + m) fallback for degenerate and tangent configurations.
  static ConvexPolygon rebuild(const ConvexPolygon& a, const ConvexPolygon& b, int result_id,
                               MergeStats* stats) {
    const Ring ra = a.vertices();
    const Ring rb = b.vertices();
    std::vector<Point> pts;
    pts.reserve(ra.size() + rb.size());
    pts.insert(pts.end(), ra.begin(), ra.end());
    pts.insert(pts.end(), rb.begin(), rb.end());
    const Ring h = convex_hull(std::move(pts));
    ConvexPolygon res = ConvexPolygon::build(h, result_id);
    if (stats) {
      stats->used_rebuild = true;
      stats->deleted_vertices =
          static_cast<int>(ra.size() + rb.size()) - static_cast<int>(h.size());
      stats->boundary_crossings =
          (ra.size() <= 64 && rb.size() <= 64) ? proper_crossings(ra, rb) : 2;
      const auto edge_list = [](const Ring& r) {
        std::vector<std::pair<Point, Point>> es;
        if (r.size() >= 2)
          for (std::size_t i = 0; i < r.size(); ++i)
            es.emplace_back(r[i], r[(i + 1) % r.size()]);
        return es;
      };
      auto in = [](const std::vector<std::pair<Point, Point>>& es, const Point& u,
                   const Point& v) {
        for (const auto& e : es)
          if (e.first == u && e.second == v) return true;
        return false;
      };
      const auto ea = edge_list(ra), eb = edge_list(rb);
      for (std::size_t i = 0; i < h.size() && h.size() >= 2; ++i) {
        const Point& u = h[i];
        const Point& v = h[(i + 1) % h.size()];
        if (!in(ea, u, v) && !in(eb, u, v)) stats->new_edges.push_back({u, v});
        if (h.size() == 2) break;  // a degenerate hull has a single edge
      }
    }
    return res;
  }

  static int proper_crossings(const Ring& a, const Ring& b) {
    std::vector<Point> pts;
    const auto edges = [](const Ring& r) {
      std::vector<Segment> es;
      if (r.size() == 2) es.push_back({r[0], r[1]});
      if (r.size() >= 3)
        for (std::size_t i = 0; i < r.size(); ++i) es.push_back({r[i], r[(i + 1) % r.size()]});
      return es;
    };
    for (const Segment& ea : edges(a))
      for (const Segment& eb : edges(b)) {
        const Orient o1 = orient(ea.a, ea.b, eb.a);
        const Orient o2 = orient(ea.a, ea.b, eb.b);
        const Orient o3 = orient(eb.a, eb.b, ea.a);
        const Orient o4 = orient(eb.a, eb.b, ea.b);
        if (static_cast<int>(o1) * static_cast<int>(o2) < 0 &&
            static_cast<int>(o3) * static_cast<int>(o4) < 0) {
          const auto p = line_line_intersection(ea.a, ea.b, eb.a, eb.b);
          if (p) pts.push_back(*p);
        }
      }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return static_cast<int>(pts.size());
  }

  static ConvexPolygon run(ConvexPolygon P, ConvexPolygon Q, const Point& q, int result_id,
                           MergeStats* stats) {
    const int nP = P.vertex_count();
    const int nQ = Q.vertex_count();

    const Cursor cq = containing_cursor(P, q);
    const Cursor fwd_start = (to_v(cq) == q) ? next_ccw(P, cq) : cq;
    const Cursor bwd_start = (from_v(cq) == q) ? prev_ccw(P, cq) : cq;

    const Walk fw = walk_forward(P, Q, fwd_start);
    if (fw.wrapped) {  // P inside Q
      if (stats) {
        stats->deleted_vertices = nP;
        stats->boundary_crossings = 0;
      }
      Q.set_id(result_id);
      return Q;
    }
    const Walk bw = walk_backward(P, Q, bwd_start);
    if (bw.wrapped) throw std::logic_error("merge: inconsistent containment walks");
    const Point xf = fw.crossing;
    const Point xb = bw.crossing;
    if (xf == xb) return rebuild(P, Q, result_id, stats);  // tangent contact

    // the other polygon's inner arc leaves xf in its own ccw direction
    Cursor qc = containing_cursor(Q, xf);
    if (to_v(qc) == xf) qc = next_ccw(Q, qc);
    const bool shifted = (from_v(qc) == xf);  // xf is a vertex of Q
    const Walk qw = walk_forward(Q, P, qc);
    if (qw.wrapped) {  // Q inside P
      if (stats) {
        stats->deleted_vertices = nQ;
        stats->boundary_crossings = 0;
      }
      P.set_id(result_id);
      return P;
    }
    if (qw.crossing == xf) return rebuild(P, Q, result_id, stats);  // grazing contact
    if (!(qw.crossing == xb)) {
      // When boundaries overlap along a shared line the two walks stop at
      // different endpoints of the shared stretch; that is a degenerate
      // tangency, not a crossing-count violation.
      const Segment& ef = fw.stop.node->e;
      const Segment& eb = bw.stop.node->e;
      const bool smear = orient(ef.a, ef.b, qw.crossing) == Orient::collinear ||
                         orient(eb.a, eb.b, qw.crossing) == Orient::collinear;
      if (smear && proper_crossings(P.vertices(), Q.vertices()) <= 2)
        return rebuild(P, Q, result_id, stats);
      throw PseudoDiskViolation("merge: boundaries cross more than twice");
    }

    const int sP = nP - (fw.deleted + bw.deleted);
    const int sQ = nQ - qw.deleted - (shifted ? 1 : 0);
    if (sP < 1 || sQ < 1) return rebuild(P, Q, result_id, stats);
    int emitP = 0, emitQ = 0;

    Gen left_f{&Q, false, to_v(qw.stop), &emitQ, sQ + 1};
    const Cursor left_f_start = shifted ? prev_ccw(Q, qc) : qc;
    Gen right_f{&P, true, from_v(bw.stop), &emitP, sP + 1};
    Gen left_b{&P, false, to_v(fw.stop), &emitP, sP + 1};
    Gen right_b{&Q, true, Point{}, &emitQ, sQ + 1};
    if (!left_f.ensure(0, left_f_start)) return rebuild(P, Q, result_id, stats);
    right_b.last_valid = left_f.verts[0];

    std::size_t li_f = 0, ri_f = 0, li_b = 0, ri_b = 0;
    if (!settle_junction(xf, left_f, left_f_start, right_f, fw.stop, li_f, ri_f))
      return rebuild(P, Q, result_id, stats);
    if (!settle_junction(xb, left_b, bw.stop, right_b, qw.stop, li_b, ri_b))
      return rebuild(P, Q, result_id, stats);

    // edges to remove: both inner arcs plus one edge per popped vertex
    std::vector<Cursor> doom_p, doom_q;
    doom_p.insert(doom_p.end(), fw.arc.begin(), fw.arc.end());
    doom_p.insert(doom_p.end(), bw.arc.begin(), bw.arc.end());
    doom_q.insert(doom_q.end(), qw.arc.begin(), qw.arc.end());
    const auto add_pops = [](std::vector<Cursor>& doom, const Gen& g, std::size_t pops) {
      for (std::size_t k = 1; k <= pops; ++k) doom.push_back(g.cursors[k]);
    };
    add_pops(doom_q, left_f, li_f);
    add_pops(doom_p, right_f, ri_f);
    add_pops(doom_p, left_b, li_b);
    add_pops(doom_q, right_b, ri_b);
    if (shifted) doom_q.push_back(left_f.cursors[0]);  // edge into the popped vertex xf
    const auto erase_all = [](ConvexPolygon& poly, std::vector<Cursor>& doom) {
      std::sort(doom.begin(), doom.end(),
                [](const Cursor& a, const Cursor& b) { return a.node < b.node; });
      doom.erase(std::unique(doom.begin(), doom.end()), doom.end());
      for (const Cursor& c : doom) (c.on_lower ? poly.lower_ : poly.upper_).erase(c.node);
    };
    erase_all(P, doom_p);
    erase_all(Q, doom_q);

    // bridges in cycle direction; tangent-shared vertices need no bridge
    std::vector<Segment> bridges;
    if (!(left_f.verts[li_f] == right_f.verts[ri_f]))
      bridges.push_back({left_f.verts[li_f], right_f.verts[ri_f]});
    if (!(left_b.verts[li_b] == right_b.verts[ri_b]))
      bridges.push_back({left_b.verts[li_b], right_b.verts[ri_b]});

    // reassemble: retained edges keep their chain side; a bridge goes to the
    // lower chain exactly when its cycle direction is lexicographic-increasing
    std::vector<Chain> lower_atoms, upper_atoms;
    lower_atoms.push_back(std::move(P.lower_));
    lower_atoms.push_back(std::move(Q.lower_));
    upper_atoms.push_back(std::move(P.upper_));
    upper_atoms.push_back(std::move(Q.upper_));
    for (const Segment& b : bridges) {
      if (b.a < b.b)
        lower_atoms.push_back(Chain::from_edges({b}));
      else
        upper_atoms.push_back(Chain::from_edges({{b.b, b.a}}));
    }
    ConvexPolygon res;
    res.id_ = result_id;
    res.lower_ = assemble(std::move(lower_atoms));
    res.upper_ = assemble(std::move(upper_atoms));
    res.left_ = res.lower_.first()->e.a;
    res.right_ = res.lower_.last()->e.b;
    if (!(res.upper_.first()->e.a == res.left_) || !(res.upper_.last()->e.b == res.right_))
      throw std::logic_error("merge: assembled chains disagree on extremes");
    res.nverts_ = res.lower_.size() + res.upper_.size();
    if (res.nverts_ <= 64) self_check(res);
    if (stats) {
      stats->deleted_vertices = nP + nQ - res.nverts_;
      stats->boundary_crossings = 2;
      stats->new_edges = bridges;
    }
    return res;
  }

  // key-orders surviving chain pieces (splitting interleaved ranges) and
  // joins them into one chain, verifying vertex continuity
  static Chain assemble(std::vector<Chain> atoms) {
    std::vector<Chain> work;
    for (Chain& c : atoms)
      if (!c.empty()) work.push_back(std::move(c));
    if (work.empty()) throw std::logic_error("merge: empty side in assembly");
    std::vector<Chain> ordered;
    while (!work.empty()) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < work.size(); ++i)
        if (work[i].first()->e.a < work[best].first()->e.a) best = i;
      std::optional<Point> cut;
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (i == best) continue;
        const Point& k = work[i].first()->e.a;
        if (k < work[best].last()->e.a && (!cut || k < *cut)) cut = k;
      }
      if (cut) {
        auto parts = Chain::split(std::move(work[best]), *cut);
        if (parts.first.empty() || parts.second.empty())
          throw std::logic_error("merge: duplicate keys in chain assembly");
        work[best] = std::move(parts.first);
        work.push_back(std::move(parts.second));
        continue;
      }
      ordered.push_back(std::move(work[best]));
      work.erase(work.begin() + best);
    }
    for (std::size_t i = 0; i + 1 < ordered.size(); ++i)
      if (!(ordered[i].last()->e.b == ordered[i + 1].first()->e.a))
        throw std::logic_error("merge: chain assembly discontinuity");
    Chain res = std::move(ordered[0]);
    for (std::size_t i = 1; i < ordered.size(); ++i)
      res = Chain::join(std::move(res), std::move(ordered[i]));
    return res;
  }

  static void self_check(const ConvexPolygon& res) {
    const Ring r = res.vertices();
    if (r.size() < 3) throw std::logic_error("merge: degenerate assembly");
    for (std::size_t i = 0; i < r.size(); ++i)
      if (orient(r[i], r[(i + 1) % r.size()], r[(i + 2) % r.size()]) != Orient::counterclockwise)
        throw std::logic_error("merge: result not strictly convex");
  }
};

ConvexPolygon ConvexPolygon::merge(ConvexPolygon a, ConvexPolygon b, MergeStats* stats) {
  if (stats) *stats = MergeStats{};
  const int result_id = a.id();
  const auto w = a.intersection_witness(b);
  if (!w) throw std::invalid_argument("merge: operands do not intersect");
  if (a.degenerate() || b.degenerate()) return MergeImpl::rebuild(a, b, result_id, stats);
  // cut the overlap with a line through the witness; the second of the four
  // clip ends along the line lies on one boundary and inside the other
  static constexpr int dirs[8][2] = {{1, 0}, {0, 1},  {1, 1},  {1, -1},
                                     {2, 1}, {1, 2}, {2, -1}, {1, -2}};
  for (const auto& d : dirs) {
    const Point w2{w->x + Rational(d[0]), w->y + Rational(d[1])};
    const auto ca = a.clip_line(*w, w2);
    const auto cb = b.clip_line(*w, w2);
    if (!ca || !cb) throw std::logic_error("merge: witness escaped an operand");
    if (ca->first == ca->second || cb->first == cb->second) continue;
    const Rational dx = w2.x - w->x, dy = w2.y - w->y;
    const auto proj = [&](const Point& p) { return dx * p.x + dy * p.y; };
    const bool a_owns = proj(cb->first) <= proj(ca->first);
    return a_owns ? MergeImpl::run(std::move(a), std::move(b), ca->first, result_id, stats)
                  : MergeImpl::run(std::move(b), std::move(a), cb->first, result_id, stats);
  }
  // no direction separates cleanly (needle-thin overlap): fall back
  return MergeImpl::rebuild(a, b, result_id, stats);
}

}  // namespace convexcover
