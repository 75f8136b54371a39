#include "doctest.h"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "convexcover/geom.hpp"
#include "convexcover/hull_chain.hpp"

using namespace convexcover;

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

// Rotate `r` so it starts at its lexicographically smallest vertex.
Ring canon(Ring r) {
  if (r.empty()) return r;
  auto it = std::min_element(r.begin(), r.end());
  std::rotate(r.begin(), it, r.end());
  return r;
}

bool same_ring(const Ring& a, const Ring& b) { return canon(a) == canon(b); }

Ring random_hull(std::mt19937& rng, int npts, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(npts));
  for (int i = 0; i < npts; ++i) pts.push_back(pt(d(rng), d(rng)));
  return convex_hull(pts);
}

// Brute-force chord of a convex ring along the line l1->l2: sample every edge
// (and vertex) against the line, collect contact points, take extremes by
// projection onto the direction.
std::optional<std::pair<Point, Point>> brute_clip(const Ring& ring, const Point& l1,
                                                  const Point& l2) {
  std::vector<Point> hits;
  auto touch = [&](const Point& p) {
    if (orient(l1, l2, p) == Orient::collinear) hits.push_back(p);
  };
  for (const Point& v : ring) touch(v);
  const std::size_t n = ring.size();
  const std::size_t nedges = (n == 2) ? 1 : n;
  for (std::size_t i = 0; n >= 2 && i < nedges; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    auto o1 = orient(l1, l2, a);
    auto o2 = orient(l1, l2, b);
    if (static_cast<int>(o1) * static_cast<int>(o2) < 0) {
      auto x = line_line_intersection(l1, l2, a, b);
      REQUIRE(x.has_value());
      hits.push_back(*x);
    }
  }
  if (hits.empty()) return std::nullopt;
  Point d{l2.x - l1.x, l2.y - l1.y};
  auto proj = [&](const Point& p) { return d.x * (p.x - l1.x) + d.y * (p.y - l1.y); };
  auto lohi = std::minmax_element(hits.begin(), hits.end(), [&](const Point& a, const Point& b) {
    return proj(a) < proj(b);
  });
  return std::make_pair(*lohi.first, *lohi.second);
}

// Count distinct points where the boundaries of two convex rings properly
// cross (transversal contact, not tangency).
int brute_proper_crossings(const Ring& ra, const Ring& rb) {
  std::vector<Point> xs;
  const std::size_t n = ra.size(), m = rb.size();
  if (n < 3 || m < 3) return 0;
  for (std::size_t i = 0; i < n; ++i) {
    Segment ea{ra[i], ra[(i + 1) % n]};
    for (std::size_t j = 0; j < m; ++j) {
      Segment eb{rb[j], rb[(j + 1) % m]};
      auto o1 = orient(ea.a, ea.b, eb.a);
      auto o2 = orient(ea.a, ea.b, eb.b);
      auto o3 = orient(eb.a, eb.b, ea.a);
      auto o4 = orient(eb.a, eb.b, ea.b);
      if (static_cast<int>(o1) * static_cast<int>(o2) < 0 &&
          static_cast<int>(o3) * static_cast<int>(o4) < 0) {
        auto x = line_line_intersection(ea.a, ea.b, eb.a, eb.b);
        REQUIRE(x.has_value());
        xs.push_back(*x);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return static_cast<int>(xs.size());
}

Ring hull_of_union(const Ring& a, const Ring& b) {
  std::vector<Point> pts(a.begin(), a.end());
  pts.insert(pts.end(), b.begin(), b.end());
  return convex_hull(pts);
}

void check_poly_matches_ring(const ConvexPolygon& p, const Ring& expect) {
  CHECK(same_ring(p.vertices(), expect));
  CHECK(p.vertex_count() == static_cast<int>(expect.size()));
}

}  // namespace

TEST_CASE("build and vertices round-trip") {
  Ring sq = {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
  auto p = ConvexPolygon::build(sq, 7);
  CHECK(p.id() == 7);
  CHECK(p.vertex_count() == 4);
  CHECK(!p.degenerate());
  CHECK(p.leftmost() == pt(0, 0));
  CHECK(p.rightmost() == pt(2, 2));
  CHECK(p.vertices() == sq);  // already starts at lexmin

  // Rotated input: vertices() still starts at the lexicographic minimum.
  Ring rot = {pt(2, 2), pt(0, 2), pt(0, 0), pt(2, 0)};
  auto q = ConvexPolygon::build(rot, 1);
  CHECK(q.vertices() == sq);

  Ring lhull = {pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 2), pt(0, 2)};
  auto l = ConvexPolygon::build(lhull, 2);
  CHECK(l.vertices() == lhull);
  CHECK(l.vertex_count() == 5);

  // Edges rebuild the boundary: lower chain runs left to right, upper chain is
  // stored lexicographically oriented as well.
  auto low = l.lower_edges();
  REQUIRE(!low.empty());
  CHECK(low.front().a == l.leftmost());
  CHECK(low.back().b == l.rightmost());
  auto up = l.upper_edges();
  REQUIRE(!up.empty());
  CHECK(up.front().a == l.leftmost());
  CHECK(up.back().b == l.rightmost());
}

TEST_CASE("degenerate builds") {
  auto one = ConvexPolygon::build({pt(3, 4)}, 0);
  CHECK(one.degenerate());
  CHECK(one.vertex_count() == 1);
  CHECK(one.leftmost() == pt(3, 4));
  CHECK(one.rightmost() == pt(3, 4));
  CHECK(one.vertices() == Ring{pt(3, 4)});

  auto two = ConvexPolygon::build({pt(0, 0), pt(2, 1)}, 0);
  CHECK(two.degenerate());
  CHECK(two.vertex_count() == 2);
  CHECK(two.vertices() == Ring{pt(0, 0), pt(2, 1)});

  CHECK_THROWS_AS(ConvexPolygon::build({}, 0), std::invalid_argument);
  // Clockwise ring rejected.
  CHECK_THROWS_AS(ConvexPolygon::build({pt(0, 0), pt(0, 2), pt(2, 2), pt(2, 0)}, 0),
                  std::invalid_argument);
  // Collinear triple rejected (hulls are strictly convex).
  CHECK_THROWS_AS(ConvexPolygon::build({pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)}, 0),
                  std::invalid_argument);
}

TEST_CASE("contains agrees with ring containment") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 120; ++iter) {
    std::uniform_int_distribution<int> dn(1, 16);
    Ring h = random_hull(rng, dn(rng), -6, 6);
    if (h.empty()) continue;
    auto p = ConvexPolygon::build(h, 0);
    for (long x = -7; x <= 7; ++x) {
      for (long y = -7; y <= 7; ++y) {
        bool expect = point_in_convex_ring(pt(x, y), h) != Containment::outside;
        CHECK(p.contains(pt(x, y)) == expect);
      }
    }
  }
}

TEST_CASE("clip_line matches brute oracle") {
  std::mt19937 rng(20601);
  std::uniform_int_distribution<long> dc(-9, 9);
  std::uniform_int_distribution<int> dn(1, 20);
  int nonempty = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Ring h = random_hull(rng, dn(rng), -6, 6);
    if (h.empty()) continue;
    auto p = ConvexPolygon::build(h, 0);
    Point l1 = pt(dc(rng), dc(rng));
    Point l2 = pt(dc(rng), dc(rng));
    if (l1 == l2) continue;
    DescentStats ds;
    auto got = p.clip_line(l1, l2, &ds);
    auto want = brute_clip(h, l1, l2);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      ++nonempty;
      CHECK(got->first == want->first);
      CHECK(got->second == want->second);
    }
  }
  CHECK(nonempty > 50);  // the corpus genuinely exercises the hit path
}

TEST_CASE("clip_line tangents and misses") {
  Ring sq = {pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)};
  auto p = ConvexPolygon::build(sq, 0);
  // Chord through the interior.
  auto c = p.clip_line(pt(-1, 2), pt(5, 2));
  REQUIRE(c.has_value());
  CHECK(c->first == pt(0, 2));
  CHECK(c->second == pt(4, 2));
  // Tangent along the bottom edge: whole edge is the contact set.
  auto t = p.clip_line(pt(-1, 0), pt(5, 0));
  REQUIRE(t.has_value());
  CHECK(t->first == pt(0, 0));
  CHECK(t->second == pt(4, 0));
  // Tangent at one corner only.
  auto k = p.clip_line(pt(-1, 1), pt(1, -1));
  REQUIRE(k.has_value());
  CHECK(k->first == pt(0, 0));
  CHECK(k->second == pt(0, 0));
  // Clean miss.
  CHECK(!p.clip_line(pt(-1, 5), pt(6, 5)).has_value());
  // Endpoints come back ordered along the direction of the line.
  auto r = p.clip_line(pt(5, 2), pt(-1, 2));
  REQUIRE(r.has_value());
  CHECK(r->first == pt(4, 2));
  CHECK(r->second == pt(0, 2));
}

TEST_CASE("intersection_witness agrees with ring oracle") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> dn(1, 14);
  std::uniform_int_distribution<long> shift(-4, 10);
  int hits = 0, misses = 0;
  for (int iter = 0; iter < 300; ++iter) {
    Ring ha = random_hull(rng, dn(rng), -6, 6);
    long dx = shift(rng), dy = shift(rng);
    Ring hb = random_hull(rng, dn(rng), -6, 6);
    for (auto& v : hb) {
      v.x = v.x + Rational(dx);
      v.y = v.y + Rational(dy);
    }
    if (ha.empty() || hb.empty()) continue;
    auto pa = ConvexPolygon::build(ha, 0);
    auto pb = ConvexPolygon::build(hb, 1);
    DescentStats ds;
    auto w = pa.intersection_witness(pb, &ds);
    bool expect = convex_rings_intersection_witness(ha, hb).has_value();
    CHECK(w.has_value() == expect);
    if (w) {
      ++hits;
      CHECK(point_in_convex_ring(*w, ha) != Containment::outside);
      CHECK(point_in_convex_ring(*w, hb) != Containment::outside);
      // Descent terminates quickly: at most one level per tree level, for
      // each of the two trees, plus the root comparison.
      CHECK(ds.max_depth <= 2 * (ds.height + 1));
    } else {
      ++misses;
    }
  }
  CHECK(hits > 40);
  CHECK(misses > 40);
}

TEST_CASE("intersection_witness containment and touching") {
  auto outer = ConvexPolygon::build({pt(0, 0), pt(10, 0), pt(10, 10), pt(0, 10)}, 0);
  auto inner = ConvexPolygon::build({pt(4, 4), pt(6, 4), pt(6, 6), pt(4, 6)}, 1);
  CHECK(outer.intersection_witness(inner).has_value());
  CHECK(inner.intersection_witness(outer).has_value());

  // Corner touch counts as intersecting (closed sets).
  auto a = ConvexPolygon::build({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}, 0);
  auto b = ConvexPolygon::build({pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)}, 1);
  auto w = a.intersection_witness(b);
  REQUIRE(w.has_value());
  CHECK(*w == pt(2, 2));

  auto far = ConvexPolygon::build({pt(20, 20), pt(22, 20), pt(22, 22)}, 2);
  CHECK(!a.intersection_witness(far).has_value());

  // Degenerate operands.
  auto dot = ConvexPolygon::build({pt(1, 1)}, 3);
  CHECK(a.intersection_witness(dot).has_value());
  CHECK(dot.intersection_witness(a).has_value());
  auto seg = ConvexPolygon::build({pt(-1, -1), pt(3, 3)}, 4);
  CHECK(a.intersection_witness(seg).has_value());
  auto seg_out = ConvexPolygon::build({pt(-5, 0), pt(-3, 2)}, 5);
  CHECK(!a.intersection_witness(seg_out).has_value());
}

TEST_CASE("merge: two overlapping squares") {
  auto a = ConvexPolygon::build({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}, 0);
  auto b = ConvexPolygon::build({pt(1, 1), pt(3, 1), pt(3, 3), pt(1, 3)}, 1);
  MergeStats st;
  auto m = ConvexPolygon::merge(std::move(a), std::move(b), &st);
  Ring expect = {pt(0, 0), pt(2, 0), pt(3, 1), pt(3, 3), pt(1, 3), pt(0, 2)};
  check_poly_matches_ring(m, expect);
  CHECK(m.id() == 0);
  CHECK(st.deleted_vertices == 2);  // 4 + 4 - 6
  CHECK(st.boundary_crossings == 2);
}

TEST_CASE("merge: identical squares (containment)") {
  Ring sq = {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
  auto a = ConvexPolygon::build(sq, 0);
  auto b = ConvexPolygon::build(sq, 1);
  MergeStats st;
  auto m = ConvexPolygon::merge(std::move(a), std::move(b), &st);
  check_poly_matches_ring(m, sq);
  CHECK(st.deleted_vertices == 4);
  CHECK(st.boundary_crossings == 0);
}

TEST_CASE("merge: triangle inside square") {
  auto a = ConvexPolygon::build({pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6)}, 3);
  auto b = ConvexPolygon::build({pt(1, 1), pt(4, 1), pt(2, 3)}, 9);
  MergeStats st;
  auto m = ConvexPolygon::merge(std::move(a), std::move(b), &st);
  check_poly_matches_ring(m, {pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6)});
  CHECK(m.id() == 3);
  CHECK(st.deleted_vertices == 3);
  CHECK(st.boundary_crossings == 0);

  // And the other orientation: container second.
  auto a2 = ConvexPolygon::build({pt(1, 1), pt(4, 1), pt(2, 3)}, 9);
  auto b2 = ConvexPolygon::build({pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6)}, 3);
  MergeStats st2;
  auto m2 = ConvexPolygon::merge(std::move(a2), std::move(b2), &st2);
  check_poly_matches_ring(m2, {pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6)});
  CHECK(m2.id() == 9);
  CHECK(st2.deleted_vertices == 3);
}

TEST_CASE("merge: squares sharing a full edge") {
  auto a = ConvexPolygon::build({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}, 0);
  auto b = ConvexPolygon::build({pt(2, 0), pt(4, 0), pt(4, 2), pt(2, 2)}, 1);
  MergeStats st;
  auto m = ConvexPolygon::merge(std::move(a), std::move(b), &st);
  check_poly_matches_ring(m, {pt(0, 0), pt(4, 0), pt(4, 2), pt(0, 2)});
  CHECK(st.deleted_vertices == 4);  // 4 + 4 - 4
}

TEST_CASE("merge: corner touch") {
  auto a = ConvexPolygon::build({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}, 0);
  auto b = ConvexPolygon::build({pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)}, 1);
  MergeStats st;
  auto m = ConvexPolygon::merge(std::move(a), std::move(b), &st);
  Ring expect = hull_of_union({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)},
                              {pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)});
  check_poly_matches_ring(m, expect);
}

TEST_CASE("merge: pseudo-disk violation detected") {
  // A tall square crossed by a wide slab: four proper boundary crossings.
  auto a = ConvexPolygon::build({pt(0, 0), pt(10, 0), pt(10, 10), pt(0, 10)}, 0);
  auto b = ConvexPolygon::build({pt(-2, 4), pt(12, 4), pt(12, 6), pt(-2, 6)}, 1);
  CHECK_THROWS_AS(ConvexPolygon::merge(std::move(a), std::move(b), nullptr),
                  PseudoDiskViolation);
}

TEST_CASE("merge: disjoint operands rejected") {
  auto a = ConvexPolygon::build({pt(0, 0), pt(1, 0), pt(1, 1)}, 0);
  auto b = ConvexPolygon::build({pt(5, 5), pt(6, 5), pt(6, 6)}, 1);
  CHECK_THROWS_AS(ConvexPolygon::merge(std::move(a), std::move(b), nullptr),
                  std::invalid_argument);
}

TEST_CASE("merge: degenerate operands fall back to rebuild") {
  auto a = ConvexPolygon::build({pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)}, 0);
  auto dot = ConvexPolygon::build({pt(2, 2)}, 1);
  MergeStats st;
  auto m = ConvexPolygon::merge(std::move(a), std::move(dot), &st);
  check_poly_matches_ring(m, {pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)});
  CHECK(st.used_rebuild);

  auto a2 = ConvexPolygon::build({pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)}, 0);
  auto seg = ConvexPolygon::build({pt(2, 2), pt(8, 2)}, 1);
  MergeStats st2;
  auto m2 = ConvexPolygon::merge(std::move(a2), std::move(seg), &st2);
  check_poly_matches_ring(m2, convex_hull({pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4), pt(8, 2)}));
  CHECK(st2.used_rebuild);
}

TEST_CASE("merge: expanding chain of squares") {
  // Sequential merges along a chain; every intermediate result must match the
  // hull-of-union oracle.
  Ring acc_ring = {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
  auto acc = ConvexPolygon::build(acc_ring, 0);
  for (long i = 1; i <= 8; ++i) {
    Ring next = {pt(i, i), pt(i + 2, i), pt(i + 2, i + 2), pt(i, i + 2)};
    auto nb = ConvexPolygon::build(next, static_cast<int>(i));
    MergeStats st;
    int before = acc.vertex_count() + 4;
    acc = ConvexPolygon::merge(std::move(acc), std::move(nb), &st);
    acc_ring = hull_of_union(acc_ring, next);
    check_poly_matches_ring(acc, acc_ring);
    CHECK(st.deleted_vertices == before - acc.vertex_count());
  }
}

TEST_CASE("merge: randomized pseudo-disk pairs match hull-of-union") {
  std::mt19937 rng(90210);
  std::uniform_int_distribution<int> dn(3, 12);
  std::uniform_int_distribution<long> shift(-3, 6);
  int done = 0, rebuilds = 0;
  while (done < 250) {
    Ring ha = random_hull(rng, dn(rng), -5, 5);
    Ring hb = random_hull(rng, dn(rng), -5, 5);
    long dx = shift(rng), dy = shift(rng);
    for (auto& v : hb) {
      v.x = v.x + Rational(dx);
      v.y = v.y + Rational(dy);
    }
    if (ha.size() < 3 || hb.size() < 3) continue;
    if (!convex_rings_intersection_witness(ha, hb)) continue;
    if (brute_proper_crossings(ha, hb) > 2) continue;  // keep the pseudo-disk promise
    ++done;
    auto pa = ConvexPolygon::build(ha, 0);
    auto pb = ConvexPolygon::build(hb, 1);
    MergeStats st;
    auto m = ConvexPolygon::merge(std::move(pa), std::move(pb), &st);
    Ring expect = hull_of_union(ha, hb);
    CHECK(same_ring(m.vertices(), expect));
    CHECK(st.deleted_vertices ==
          static_cast<int>(ha.size() + hb.size() - expect.size()));
    if (st.used_rebuild) ++rebuilds;
  }
  // The fast path must carry the bulk of the corpus.
  CHECK(rebuilds < 125);
}

TEST_CASE("merge: repeated merges keep chains balanced") {
  // Long horizontal strip absorbed square by square; the result alternates to
  // exercise splits and joins on larger chains.
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> dy(-2, 2);
  auto acc = ConvexPolygon::build({pt(0, 0), pt(3, 0), pt(3, 3), pt(0, 3)}, 0);
  Ring acc_ring = acc.vertices();
  for (long i = 1; i <= 40; ++i) {
    long y = dy(rng);
    Ring next = {pt(2 * i, y), pt(2 * i + 3, y), pt(2 * i + 3, y + 3), pt(2 * i, y + 3)};
    auto nb = ConvexPolygon::build(next, static_cast<int>(i));
    auto pa_ring = acc_ring;
    if (!convex_rings_intersection_witness(pa_ring, next)) continue;
    if (brute_proper_crossings(pa_ring, next) > 2) continue;
    MergeStats st;
    acc = ConvexPolygon::merge(std::move(acc), std::move(nb), &st);
    acc_ring = hull_of_union(acc_ring, next);
    CHECK(same_ring(acc.vertices(), acc_ring));
  }
  CHECK(acc.vertex_count() >= 4);
}
