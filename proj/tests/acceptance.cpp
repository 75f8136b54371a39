// Acceptance suite: ten end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero when any criterion fails. All tolerances are the named
// constants below; every geometric comparison is exact rational arithmetic.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "convexcover/convexify.hpp"
#include "convexcover/forest.hpp"
#include "convexcover/geom.hpp"
#include "convexcover/hull_chain.hpp"
#include "convexcover/instance.hpp"
#include "convexcover/oracle.hpp"
#include "convexcover/svg.hpp"
#include "support/corpus.hpp"

using namespace convexcover;
using corpus::ipt;

namespace {

// ---- pinned budgets and tolerances -----------------------------------------
constexpr int kOracleInstances = 500;       // criterion 1
constexpr int kOrderInstances = 100;        // criterion 2
constexpr int kOrderSeeds = 10;             // criterion 2
constexpr int kCoarsenInstances = 100;      // criterion 3
constexpr int kCoarseningsPer = 100;        // criterion 3
constexpr int kMaxCrossings = 2;            // criterion 4
constexpr int kMicroCases = 10000;          // criterion 6
constexpr int kMergeCases = 1000;           // criterion 6
constexpr int kEquivInstances = 100;        // criterion 7
constexpr int kCascadePieces = 100;         // criterion 8
constexpr double kCascadeBudgetSec = 1.0;   // criterion 8
constexpr double kMaxDoublingRatio = 3.0;   // criterion 9
constexpr long kLadderSizes[] = {10000, 20000, 40000, 80000};  // criterion 9
constexpr int kSegmentInstances = 200;      // criterion 10
constexpr int kSegmentMax = 30;             // criterion 10

// ---- shared bookkeeping -----------------------------------------------------

struct Sample {  // one full solver run, for the accounting criteria
  long n_vertices = 0;
  int n_polygons = 0;
  RunStats stats;
};
std::vector<Sample> g_samples;

Cover solve_sampled(const std::vector<Ring>& polys, EngineKind kind) {
  Sample s;
  s.n_polygons = static_cast<int>(polys.size());
  for (const Ring& r : polys) s.n_vertices += static_cast<long>(r.size());
  const Cover cover = convexify(polys, kind, &s.stats);
  g_samples.push_back(s);
  return cover;
}

int g_failed = 0;

// Prints "criterion  N: PASS  <title> — <detail>  (t s)" when destroyed.
class Criterion {
 public:
  Criterion(int id, std::string title)
      : id_(id), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void fail(const std::string& why) {
    if (failure_.empty()) failure_ = why;
  }
  void note(const std::string& detail) { detail_ = detail; }
  bool failed() const { return !failure_.empty(); }

  ~Criterion() {
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const std::string& msg = failure_.empty() ? detail_ : failure_;
    std::printf("criterion %2d: %s  %s — %s  (%.1fs)\n", id_,
                failure_.empty() ? "PASS" : "FAIL", title_.c_str(), msg.c_str(), sec);
    std::fflush(stdout);
    if (!failure_.empty()) ++g_failed;
  }

 private:
  int id_;
  std::string title_;
  std::string detail_ = "ok";
  std::string failure_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// ---- criterion bodies -------------------------------------------------------

void oracle_equivalence(Criterion& c) {
  int matched = 0;
  for (int seed = 0; seed < kOracleInstances; ++seed) {
    const std::vector<Ring> polys = corpus::small_instance(static_cast<std::uint64_t>(seed));
    const Cover cover = solve_sampled(polys, EngineKind::grid);
    if (!canonical_equal(cover, brute_convexify(polys, static_cast<std::uint64_t>(seed)))) {
      c.fail("instance " + std::to_string(seed) + ": solver and reference covers differ");
      return;
    }
    ++matched;
  }
  c.note(std::to_string(matched) + "/" + std::to_string(kOracleInstances) +
         " covers match the reference");
}

void order_invariance(Criterion& c) {
  for (int seed = 0; seed < kOrderInstances; ++seed) {
    const std::vector<Ring> polys = corpus::small_instance(static_cast<std::uint64_t>(seed));
    const Cover first = brute_convexify(polys, 0);
    for (int s = 1; s < kOrderSeeds; ++s)
      if (!canonical_equal(first, brute_convexify(polys, static_cast<std::uint64_t>(s)))) {
        c.fail("instance " + std::to_string(seed) + ": merge order " + std::to_string(s) +
               " changed the cover");
        return;
      }
  }
  c.note(std::to_string(kOrderInstances) + " instances x " + std::to_string(kOrderSeeds) +
         " merge orders agree");
}

// Hull of the union of two cover elements.
CoverElement fuse(const CoverElement& a, const CoverElement& b) {
  CoverElement out;
  std::vector<Point> pts(a.hull.begin(), a.hull.end());
  pts.insert(pts.end(), b.hull.begin(), b.hull.end());
  out.hull = convex_hull(std::move(pts));
  std::set_union(a.covered.begin(), a.covered.end(), b.covered.begin(), b.covered.end(),
                 std::back_inserter(out.covered));
  return out;
}

// A valid but coarser cover: merge two random groups, then cascade until the
// elements are pairwise disjoint again.
Cover coarsen(const Cover& opt, std::mt19937_64& rng) {
  std::vector<CoverElement> els = opt.elements;
  const std::size_t i = rng() % els.size();
  std::size_t j = rng() % (els.size() - 1);
  if (j >= i) ++j;
  els[i] = fuse(els[i], els[j]);
  els.erase(els.begin() + static_cast<std::ptrdiff_t>(j));
  for (bool again = true; again;) {
    again = false;
    for (std::size_t a = 0; a < els.size() && !again; ++a)
      for (std::size_t b = a + 1; b < els.size() && !again; ++b)
        if (convex_rings_intersection_witness(els[a].hull, els[b].hull)) {
          els[a] = fuse(els[a], els[b]);
          els.erase(els.begin() + static_cast<std::ptrdiff_t>(b));
          again = true;
        }
  }
  Cover out;
  out.elements = std::move(els);
  return out;
}

void min_area(Criterion& c) {
  std::mt19937_64 rng(4242);
  int coarsenings = 0;
  for (int seed = 0; seed < kCoarsenInstances; ++seed) {
    const std::vector<Ring> polys = corpus::small_instance(static_cast<std::uint64_t>(seed));
    const Cover opt = solve_sampled(polys, EngineKind::grid);
    const Rational opt_area = opt.total_area();

    std::vector<Point> all;
    for (const Ring& r : polys) all.insert(all.end(), r.begin(), r.end());
    if (opt_area > polygon_area(convex_hull(std::move(all)))) {
      c.fail("instance " + std::to_string(seed) + ": cover exceeds the global hull");
      return;
    }
    if (opt.elements.size() < 2) continue;  // nothing to coarsen

    for (int t = 0; t < kCoarseningsPer; ++t) {
      const Cover coarse = coarsen(opt, rng);
      if (t == 0) {  // structural validity spot check
        const ValidationReport rep = validate_cover(polys, coarse, 1);
        if (!rep.disjoint || !rep.partitioned || !rep.hull_of_group) {
          c.fail("instance " + std::to_string(seed) + ": coarsening is not a valid cover");
          return;
        }
      }
      if (opt_area > coarse.total_area()) {
        c.fail("instance " + std::to_string(seed) + " coarsening " + std::to_string(t) +
               ": a coarser cover has smaller area");
        return;
      }
      ++coarsenings;
    }
  }
  c.note("cover <= global hull on " + std::to_string(kCoarsenInstances) +
         " instances, <= " + std::to_string(coarsenings) + " coarsenings");
}

void pseudo_disk_crossings(Criterion& c) {
  // Widen the sample set beyond the oracle instances.
  solve_sampled(corpus::clamp(), EngineKind::naive);
  solve_sampled(corpus::staircase(50), EngineKind::grid);
  solve_sampled(corpus::nested_pocket(), EngineKind::grid);
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    solve_sampled(corpus::mixed_instance(seed), EngineKind::grid);

  long merges = 0;
  for (const Sample& s : g_samples) {
    if (s.stats.max_boundary_crossings > kMaxCrossings) {
      c.fail("a merge crossed boundaries " + std::to_string(s.stats.max_boundary_crossings) +
             " times");
      return;
    }
    merges += s.stats.merges;
  }
  c.note("max 2 boundary crossings over " + std::to_string(merges) + " merges in " +
         std::to_string(g_samples.size()) + " runs");
}

void deletion_accounting(Criterion& c) {
  for (const Sample& s : g_samples) {
    if (s.stats.deleted_vertices > 2 * s.n_vertices) {
      c.fail("deletions " + std::to_string(s.stats.deleted_vertices) + " exceed 2N = " +
             std::to_string(2 * s.n_vertices));
      return;
    }
    if (s.stats.merges > s.n_polygons - 1 && s.n_polygons > 0) {
      c.fail("merges " + std::to_string(s.stats.merges) + " exceed n - 1");
      return;
    }
    if (s.stats.tasks_processed > s.stats.initial_tasks + 2 * s.stats.merges) {
      c.fail("tasks " + std::to_string(s.stats.tasks_processed) + " exceed initial + 2*merges");
      return;
    }
  }
  c.note("deletions <= 2N, merges <= n-1, tasks <= initial + 2*merges in " +
         std::to_string(g_samples.size()) + " runs");
}

Ring random_hull(std::mt19937_64& rng, long span, int npts) {
  Ring h;
  do {
    std::vector<Point> pts;
    for (int i = 0; i < npts; ++i)
      pts.push_back(ipt(static_cast<long>(rng() % (span + 1)),
                        static_cast<long>(rng() % (span + 1))));
    h = convex_hull(std::move(pts));
  } while (h.size() < 3);
  return h;
}

// Extremes of boundary-line contact by scanning every edge; the chord of a
// convex region and a line is spanned by its boundary contacts.
std::optional<std::pair<Point, Point>> naive_clip(const Ring& ring, const Point& l1,
                                                  const Point& l2) {
  std::vector<Point> hits;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    const Orient oa = orient(l1, l2, a);
    const Orient ob = orient(l1, l2, b);
    if (oa == Orient::collinear) hits.push_back(a);
    if (oa != Orient::collinear && ob != Orient::collinear && oa != ob)
      hits.push_back(*line_line_intersection(l1, l2, a, b));
  }
  if (hits.empty()) return std::nullopt;
  const auto key = [&](const Point& p) {
    return (p.x - l1.x) * (l2.x - l1.x) + (p.y - l1.y) * (l2.y - l1.y);
  };
  Point lo = hits[0], hi = hits[0];
  for (const Point& p : hits) {
    if (key(p) < key(lo)) lo = p;
    if (key(p) > key(hi)) hi = p;
  }
  return std::make_pair(lo, hi);
}

// Distinct points where the two boundaries touch or cross.
int boundary_contacts(const Ring& a, const Ring& b) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Segment ea{a[i], a[(i + 1) % a.size()]};
      const Segment eb{b[j], b[(j + 1) % b.size()]};
      const SegmentIntersection si = segment_intersect(ea, eb);
      if (si.kind == SegmentIntersection::Kind::point) pts.push_back(si.p);
      if (si.kind == SegmentIntersection::Kind::overlap) {
        pts.push_back(si.span.a);
        pts.push_back(si.span.b);
      }
    }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return static_cast<int>(pts.size());
}

void micro_oracles(Criterion& c) {
  std::mt19937_64 rng(777);

  // contains vs the naive membership test
  for (int t = 0; t < kMicroCases; ++t) {
    const Ring ring = random_hull(rng, 20, 4 + static_cast<int>(rng() % 8));
    const ConvexPolygon poly = ConvexPolygon::build(ring, 0);
    Point p = ipt(static_cast<long>(rng() % 25) - 2, static_cast<long>(rng() % 25) - 2);
    if (t % 3 == 1) p = ring[rng() % ring.size()];  // exact vertex
    if (t % 3 == 2) {                               // edge midpoint: boundary rational
      const Point& a = ring[t % ring.size()];
      const Point& b = ring[(t + 1) % ring.size()];
      p = Point{(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)};
    }
    const bool fast = poly.contains(p);
    const bool slow = point_in_convex_ring(p, ring) != Containment::outside;
    if (fast != slow) {
      c.fail("contains disagrees at case " + std::to_string(t));
      return;
    }
  }

  // intersection witness vs the brute-force pair scan
  for (int t = 0; t < kMicroCases; ++t) {
    const Ring a = random_hull(rng, 14, 4 + static_cast<int>(rng() % 6));
    Ring b = random_hull(rng, 14, 4 + static_cast<int>(rng() % 6));
    const long dx = static_cast<long>(rng() % 24) - 6, dy = static_cast<long>(rng() % 24) - 6;
    for (Point& p : b) {
      p.x += Rational(dx);
      p.y += Rational(dy);
    }
    const ConvexPolygon pa = ConvexPolygon::build(a, 0);
    const ConvexPolygon pb = ConvexPolygon::build(b, 1);
    const std::optional<Point> fast = pa.intersection_witness(pb);
    const bool slow = convex_rings_intersection_witness(a, b).has_value();
    if (fast.has_value() != slow) {
      c.fail("intersect disagrees at case " + std::to_string(t));
      return;
    }
    if (fast && (point_in_convex_ring(*fast, a) == Containment::outside ||
                 point_in_convex_ring(*fast, b) == Containment::outside)) {
      c.fail("witness outside an operand at case " + std::to_string(t));
      return;
    }
  }

  // line clip vs the naive edge scan
  for (int t = 0; t < kMicroCases; ++t) {
    const Ring ring = random_hull(rng, 18, 4 + static_cast<int>(rng() % 8));
    Point l1 = ipt(static_cast<long>(rng() % 27) - 4, static_cast<long>(rng() % 27) - 4);
    Point l2 = ipt(static_cast<long>(rng() % 27) - 4, static_cast<long>(rng() % 27) - 4);
    if (t % 4 == 1) l1 = ring[rng() % ring.size()];  // chord through vertices
    if (t % 4 == 1) l2 = ring[rng() % ring.size()];
    if (l1 == l2) continue;
    const ConvexPolygon poly = ConvexPolygon::build(ring, 0);
    const auto fast = poly.clip_line(l1, l2);
    const auto slow = naive_clip(ring, l1, l2);
    if (fast.has_value() != slow.has_value() ||
        (fast && (fast->first != slow->first || fast->second != slow->second))) {
      c.fail("line clip disagrees at case " + std::to_string(t));
      return;
    }
  }

  // merge vs the hull of the combined vertex sets, on pseudo-disk pairs
  int merges = 0;
  while (merges < kMergeCases) {
    const Ring a = random_hull(rng, 16, 5 + static_cast<int>(rng() % 6));
    Ring b = random_hull(rng, 16, 5 + static_cast<int>(rng() % 6));
    const long dx = static_cast<long>(rng() % 20) - 4, dy = static_cast<long>(rng() % 20) - 4;
    for (Point& p : b) {
      p.x += Rational(dx);
      p.y += Rational(dy);
    }
    if (!convex_rings_intersection_witness(a, b)) continue;
    if (boundary_contacts(a, b) > kMaxCrossings) continue;  // not a pseudo-disk pair
    MergeStats ms;
    const ConvexPolygon merged =
        ConvexPolygon::merge(ConvexPolygon::build(a, 0), ConvexPolygon::build(b, 1), &ms);
    std::vector<Point> pts(a.begin(), a.end());
    pts.insert(pts.end(), b.begin(), b.end());
    if (merged.vertices() != convex_hull(std::move(pts))) {
      c.fail("merge differs from the combined hull at case " + std::to_string(merges));
      return;
    }
    if (ms.boundary_crossings > kMaxCrossings) {
      c.fail("merge reported " + std::to_string(ms.boundary_crossings) + " crossings");
      return;
    }
    ++merges;
  }
  c.note(std::to_string(3 * kMicroCases) + " predicate cases and " +
         std::to_string(kMergeCases) + " merges agree with naive oracles");
}

void engine_equivalence(Criterion& c) {
  std::vector<std::vector<Ring>> corpus_sets;
  for (int seed = 0; seed < kEquivInstances; ++seed)
    corpus_sets.push_back(corpus::small_instance(static_cast<std::uint64_t>(seed)));
  corpus_sets.push_back(corpus::clamp());
  corpus_sets.push_back(corpus::nested_pocket());
  corpus_sets.push_back(corpus::staircase(2));
  corpus_sets.push_back(corpus::staircase(8));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    corpus_sets.push_back(corpus::mixed_instance(seed));

  long rays = 0;
  for (std::size_t i = 0; i < corpus_sets.size(); ++i) {
    const TraceArtifacts na = run_traced(corpus_sets[i], EngineKind::naive);
    const TraceArtifacts gr = run_traced(corpus_sets[i], EngineKind::grid);
    if (na.events.size() != gr.events.size()) {
      c.fail("instance " + std::to_string(i) + ": ray counts differ");
      return;
    }
    for (std::size_t e = 0; e < na.events.size(); ++e) {
      const TraceEvent& x = na.events[e];
      const TraceEvent& y = gr.events[e];
      if (!(x.task.p1 == y.task.p1) || !(x.task.p2 == y.task.p2) ||
          !(x.hit.point == y.hit.point) || x.hit.obstacle_id != y.hit.obstacle_id ||
          x.hit.obstacle_owner != y.hit.obstacle_owner || x.merged != y.merged ||
          x.merged_hull != y.merged_hull) {
        c.fail("instance " + std::to_string(i) + ": hit " + std::to_string(e) + " differs");
        return;
      }
    }
    if (!canonical_equal(na.cover, gr.cover)) {
      c.fail("instance " + std::to_string(i) + ": covers differ");
      return;
    }
    rays += static_cast<long>(na.events.size());
  }
  c.note("identical hit sequences (" + std::to_string(rays) + " rays) on " +
         std::to_string(corpus_sets.size()) + " instances");
}

void cascade_fixture(Criterion& c) {
  const std::vector<Ring> polys = corpus::staircase(kCascadePieces);
  const auto t0 = std::chrono::steady_clock::now();
  const Cover cover = convexify(polys, EngineKind::grid);
  const double sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (cover.elements.size() != 1)
    c.fail("collapsed to " + std::to_string(cover.elements.size()) + " elements, expected 1");
  if (sec >= kCascadeBudgetSec)
    c.fail("took " + fmt(sec) + "s, budget " + fmt(kCascadeBudgetSec) + "s");
  c.note(std::to_string(kCascadePieces) + " pieces -> 1 element in " + fmt(sec) + "s");
}

// Jittered-grid stars plus bounded interlocking cascades; the same blend the
// bench command times.
std::vector<Ring> ladder_instance(long n_vertices, unsigned seed) {
  const int stars = static_cast<int>(std::max<long>(1, n_vertices / 40));
  const long g = static_cast<long>(std::ceil(std::sqrt(double(stars))));
  const long bbox = 34 * g;
  InstanceFile inst = gen_instance(stars, 20, bbox, seed);
  constexpr int kChain = 24;
  const long chunks = std::max<long>(1, n_vertices / (12 * kChain));
  const long cg = static_cast<long>(std::ceil(std::sqrt(double(chunks))));
  for (long ch = 0; ch < chunks; ++ch)
    for (Ring& r : corpus::staircase(kChain, bbox + 8 + (ch % cg) * 64, (ch / cg) * 64))
      inst.polygons.push_back(std::move(r));
  return std::move(inst.polygons);
}

void quasi_linear_scaling(Criterion& c) {
  std::vector<double> secs;
  std::string detail;
  for (const long n : kLadderSizes) {
    const std::vector<Ring> polys = ladder_instance(n, 11);
    const auto t0 = std::chrono::steady_clock::now();
    solve_sampled(polys, EngineKind::grid);
    secs.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    detail += (detail.empty() ? "" : " ") + fmt(secs.back()) + "s";
  }
  for (std::size_t i = 1; i < secs.size(); ++i) {
    const double ratio = secs[i] / secs[i - 1];
    detail += (i == 1 ? " ratios " : " ") + fmt(ratio);
    if (ratio > kMaxDoublingRatio)
      c.fail("doubling ratio " + fmt(ratio) + " exceeds " + fmt(kMaxDoublingRatio) +
             " at N = " + std::to_string(kLadderSizes[i]));
  }
  c.note(detail);
}

void segment_covers(Criterion& c) {
  // Pinned fixtures: a crossing pair fills in; far-apart segments stay flat.
  {
    const std::vector<Segment> cross{{ipt(0, 0), ipt(2, 2)}, {ipt(0, 2), ipt(2, 0)}};
    const Cover got = convexify_segments(cross);
    Cover want;
    want.elements.push_back(
        {Ring{ipt(0, 0), ipt(2, 0), ipt(2, 2), ipt(0, 2)}, std::vector<int>{0, 1}});
    if (!canonical_equal(got, want) || got.total_area() != Rational(4)) {
      c.fail("crossing pair does not produce the unit-square element");
      return;
    }
  }
  {
    const std::vector<Segment> apart{{ipt(0, 0), ipt(2, 2)}, {ipt(9, 0), ipt(9, 3)}};
    const Cover got = convexify_segments(apart);
    Cover want;
    want.elements.push_back({Ring{ipt(0, 0), ipt(2, 2)}, std::vector<int>{0}});
    want.elements.push_back({Ring{ipt(9, 0), ipt(9, 3)}, std::vector<int>{1}});
    if (!canonical_equal(got, want) || got.total_area() != Rational(0)) {
      c.fail("isolated segments do not stay degenerate");
      return;
    }
  }

  for (int seed = 0; seed < kSegmentInstances; ++seed) {
    const int m = 3 + seed % (kSegmentMax - 2);
    const std::vector<Segment> segs =
        corpus::random_segments(m, 900 + static_cast<std::uint64_t>(seed));
    const Cover cover = convexify_segments(segs);

    // Reference one: every segment as its own degenerate ring.
    std::vector<Ring> flat;
    for (const Segment& s : segs) flat.push_back(Ring{s.a, s.b});
    if (!canonical_equal(cover, brute_convexify(flat, static_cast<std::uint64_t>(seed)))) {
      c.fail("instance " + std::to_string(seed) + ": differs from the per-segment reference");
      return;
    }

    // Reference two: hull per crossing-connected component.
    MergeForest forest(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (!forest.same(i, j) &&
            segment_intersect(segs[i], segs[j]).kind != SegmentIntersection::Kind::none)
          forest.merge(i, j);
    const std::vector<std::vector<int>> groups = forest.groups();
    std::vector<Ring> comps;
    for (const std::vector<int>& group : groups) {
      std::vector<Point> pts;
      for (const int id : group) {
        pts.push_back(segs[static_cast<std::size_t>(id)].a);
        pts.push_back(segs[static_cast<std::size_t>(id)].b);
      }
      comps.push_back(convex_hull(std::move(pts)));
    }
    Cover ref = brute_convexify(comps, static_cast<std::uint64_t>(seed) + 1);
    for (CoverElement& el : ref.elements) {  // component ids back to segment ids
      std::vector<int> expanded;
      for (const int cid : el.covered) {
        const std::vector<int>& g = groups[static_cast<std::size_t>(cid)];
        expanded.insert(expanded.end(), g.begin(), g.end());
      }
      std::sort(expanded.begin(), expanded.end());
      el.covered = std::move(expanded);
    }
    if (!canonical_equal(cover, ref)) {
      c.fail("instance " + std::to_string(seed) + ": differs from the component reference");
      return;
    }
  }
  c.note(std::to_string(kSegmentInstances) +
         " segment instances match both reference starts");
}

}  // namespace

int main() {
  std::printf("acceptance: exact-arithmetic cover checks\n");
  {
    Criterion c(1, "oracle equivalence");
    oracle_equivalence(c);
  }
  {
    Criterion c(2, "order invariance");
    order_invariance(c);
  }
  {
    Criterion c(3, "minimum area");
    min_area(c);
  }
  {
    Criterion c(4, "pseudo-disk crossings");
    pseudo_disk_crossings(c);
  }
  {
    Criterion c(5, "deletion accounting");
    deletion_accounting(c);
  }
  {
    Criterion c(6, "data-structure micro-oracles");
    micro_oracles(c);
  }
  {
    Criterion c(7, "engine equivalence");
    engine_equivalence(c);
  }
  {
    Criterion c(8, "sequential cascade fixture");
    cascade_fixture(c);
  }
  {
    Criterion c(9, "quasi-linear scaling");
    quasi_linear_scaling(c);
  }
  {
    Criterion c(10, "segment covers");
    segment_covers(c);
  }
  if (g_failed != 0) {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failed);
    return 1;
  }
  std::printf("acceptance: all 10 criteria passed\n");
  return 0;
}
