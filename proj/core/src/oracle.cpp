#include "convexcover/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace convexcover {

namespace {

Ring hull_of_rings(const Ring& a, const Ring& b) {
  std::vector<Point> pts(a.begin(), a.end());
  pts.insert(pts.end(), b.begin(), b.end());
  return convex_hull(std::move(pts));
}

// Rotation-independent form: least vertex first (ccw rings stay ccw).
Ring canonical_ring(const Ring& r) {
  if (r.size() <= 2) {
    Ring s = r;
    std::sort(s.begin(), s.end());
    return s;
  }
  const auto it = std::min_element(r.begin(), r.end());
  Ring s(it, r.end());
  s.insert(s.end(), r.begin(), it);
  return s;
}

// Does the infinite line p1p2 meet the closed polygon? True unless every
// vertex lies strictly on one side.
bool line_meets_ring(const Point& p1, const Point& p2, const Ring& ring) {
  bool pos = false, neg = false;
  for (const Point& w : ring) {
    const Orient o = orient(p1, p2, w);
    if (o == Orient::collinear) return true;
    (o == Orient::counterclockwise ? pos : neg) = true;
    if (pos && neg) return true;
  }
  return false;
}

}  // namespace

Cover brute_convexify(const std::vector<Ring>& rings, std::uint64_t seed) {
  if (rings.empty()) return {};
  struct Item {
    Ring hull;
    std::vector<int> ids;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (rings[i].empty()) throw std::invalid_argument("brute_convexify: empty ring");
    items.push_back(Item{convex_hull(rings[i]), {static_cast<int>(i)}});
  }

  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = i + 1; j < items.size(); ++j)
        if (convex_rings_intersection_witness(items[i].hull, items[j].hull)) pairs.emplace_back(i, j);
    if (pairs.empty()) break;
    const auto [i, j] = pairs[static_cast<std::size_t>(rng() % pairs.size())];
    Item merged;
    merged.hull = hull_of_rings(items[i].hull, items[j].hull);
    merged.ids = std::move(items[i].ids);
    merged.ids.insert(merged.ids.end(), items[j].ids.begin(), items[j].ids.end());
    std::sort(merged.ids.begin(), merged.ids.end());
    items[i] = std::move(merged);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(j));
  }

  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.ids[0] < b.ids[0]; });
  Cover out;
  for (Item& it : items) out.elements.push_back(CoverElement{std::move(it.hull), std::move(it.ids)});
  return out;
}

ValidationReport validate_cover(const std::vector<Ring>& inputs, const Cover& cover,
                                std::uint64_t seed) {
  ValidationReport rep;
  rep.area = cover.total_area();

  // partition of input ids
  std::vector<int> all;
  bool any_empty = false;
  for (const CoverElement& e : cover.elements) {
    if (e.covered.empty()) any_empty = true;
    all.insert(all.end(), e.covered.begin(), e.covered.end());
  }
  std::sort(all.begin(), all.end());
  rep.partitioned = !any_empty && all.size() == inputs.size();
  for (std::size_t i = 0; i < all.size() && rep.partitioned; ++i)
    if (all[i] != static_cast<int>(i)) rep.partitioned = false;

  // pairwise disjoint
  rep.disjoint = true;
  for (std::size_t i = 0; i < cover.elements.size() && rep.disjoint; ++i)
    for (std::size_t j = i + 1; j < cover.elements.size() && rep.disjoint; ++j)
      if (convex_rings_intersection_witness(cover.elements[i].hull, cover.elements[j].hull))
        rep.disjoint = false;

  // each element is the hull of its covered inputs
  rep.hull_of_group = rep.partitioned;
  if (rep.hull_of_group)
    for (const CoverElement& e : cover.elements) {
      std::vector<Point> pts;
      for (const int id : e.covered) {
        const Ring& r = inputs[static_cast<std::size_t>(id)];
        pts.insert(pts.end(), r.begin(), r.end());
      }
      if (convex_hull(std::move(pts)) != canonical_ring(e.hull)) {
        rep.hull_of_group = false;
        break;
      }
    }

  // tightness: random interior lines must meet a covered input
  std::mt19937_64 rng(seed);
  if (rep.partitioned)
    for (const CoverElement& e : cover.elements) {
      if (e.hull.size() < 3) continue;
      const std::size_t m = e.hull.size();
      Point c{Rational(0), Rational(0)};
      for (const Point& v : e.hull) {
        c.x += v.x;
        c.y += v.y;
      }
      c.x /= Rational(static_cast<long>(m));
      c.y /= Rational(static_cast<long>(m));
      for (int line = 0; line < 100; ++line) {
        Point p1, p2;
        do {
          const Point& v1 = e.hull[static_cast<std::size_t>(rng() % m)];
          const Point& v2 = e.hull[static_cast<std::size_t>(rng() % m)];
          const Rational t1(static_cast<long>(rng() % 1000) + 1, 1001);
          const Rational t2(static_cast<long>(rng() % 1000) + 1, 1001);
          p1 = Point{c.x + t1 * (v1.x - c.x), c.y + t1 * (v1.y - c.y)};
          p2 = Point{c.x + t2 * (v2.x - c.x), c.y + t2 * (v2.y - c.y)};
        } while (p1 == p2);
        bool hit = false;
        for (const int id : e.covered)
          if (line_meets_ring(p1, p2, inputs[static_cast<std::size_t>(id)])) {
            hit = true;
            break;
          }
        if (!hit) ++rep.tight_sampling_failures;
      }
    }
  return rep;
}

bool canonical_equal(const Cover& a, const Cover& b) {
  using Key = std::pair<Ring, std::vector<int>>;
  const auto keys = [](const Cover& c) {
    std::vector<Key> out;
    for (const CoverElement& e : c.elements) {
      std::vector<int> ids = e.covered;
      std::sort(ids.begin(), ids.end());
      out.emplace_back(canonical_ring(e.hull), std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return keys(a) == keys(b);
}

}  // namespace convexcover
