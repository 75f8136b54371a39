#include "convexcover/convexify.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace convexcover {

Rational Cover::total_area() const {
  Rational s(0);
  for (const CoverElement& e : elements)
    if (e.hull.size() >= 3) s += polygon_area(e.hull);
  return s;
}

namespace {

// Full validation is quadratic; skip it beyond these sizes.
constexpr std::size_t kSimpleCheckLimit = 512;    // vertices per polygon
constexpr std::size_t kDisjointCheckLimit = 64;   // polygons

Ring ccw_copy(const Ring& ring) {
  Ring r = ring;
  if (polygon_area(r) < Rational(0)) std::reverse(r.begin(), r.end());
  return r;
}

// Directed edges between consecutive strict-turn vertices of a ccw ring,
// i.e. maximal collinear runs folded into one edge each.
std::vector<Segment> corner_edges(const Ring& ring) {
  const int n = static_cast<int>(ring.size());
  std::vector<int> corners;
  for (int i = 0; i < n; ++i) {
    const Point& a = ring[static_cast<std::size_t>((i + n - 1) % n)];
    const Point& b = ring[static_cast<std::size_t>(i)];
    const Point& c = ring[static_cast<std::size_t>((i + 1) % n)];
    if (orient(a, b, c) != Orient::collinear) corners.push_back(i);
  }
  std::vector<Segment> out;
  const int k = static_cast<int>(corners.size());
  for (int j = 0; j < k; ++j)
    out.push_back(Segment{ring[static_cast<std::size_t>(corners[static_cast<std::size_t>(j)])],
                          ring[static_cast<std::size_t>(corners[static_cast<std::size_t>((j + 1) % k)])]});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------

ConvexifyRun::ConvexifyRun(const std::vector<Ring>& polygons, EngineKind kind)
    : scene_(kind, {}), forest_(static_cast<int>(polygons.size())) {
  std::vector<Ring> norm;
  norm.reserve(polygons.size());
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    const Ring& p = polygons[i];
    if (p.size() < 3 || polygon_area(p) == Rational(0))
      throw std::invalid_argument("convexify: polygon " + std::to_string(i) + " is degenerate");
    if (p.size() <= kSimpleCheckLimit && !is_simple_polygon(p))
      throw std::invalid_argument("convexify: polygon " + std::to_string(i) + " is not simple");
    norm.push_back(ccw_copy(p));
  }
  if (norm.size() <= kDisjointCheckLimit)
    for (std::size_t i = 0; i < norm.size(); ++i)
      for (std::size_t j = i + 1; j < norm.size(); ++j)
        if (!polygons_disjoint(norm[i], norm[j]))
          throw std::invalid_argument("convexify: polygons " + std::to_string(i) + " and " +
                                      std::to_string(j) + " intersect");

  scene_ = Scene::from_polygons(norm, kind);
  for (std::size_t i = 0; i < norm.size(); ++i) {
    const int id = static_cast<int>(i);
    for (const Point& v : norm[i]) vertex_owner_.emplace(v, id);

    const Ring hull = convex_hull(norm[i]);
    stats_.initial_hull_vertices += static_cast<long long>(hull.size());
    live_.emplace(id, ConvexPolygon::build(hull, id));

    std::set<std::pair<Point, Point>> boundary;
    for (const Segment& e : corner_edges(norm[i])) boundary.emplace(e.a, e.b);
    for (std::size_t j = 0; j < hull.size(); ++j) {
      const Point& a = hull[j];
      const Point& b = hull[(j + 1) % hull.size()];
      if (!boundary.count({a, b})) queue_.push_back(EdgeTask{a, b, id, id});
    }
  }
  stats_.initial_tasks = static_cast<int>(queue_.size());
}

int ConvexifyRun::owner_at(const Point& p) const {
  const auto it = vertex_owner_.find(p);
  if (it == vertex_owner_.end())
    throw std::logic_error("convexify: hull vertex is not an input vertex");
  return it->second;
}

bool ConvexifyRun::step() {
  if (queue_.empty()) return false;
  const EdgeTask t = queue_.front();
  queue_.pop_front();
  ++stats_.tasks_processed;

  // One shot per task. Contacts owned by the shooter's own component are
  // passed through: own material only ever grazes a hull edge, and a foreign
  // graze or crossing is exactly an intersection witness. If nothing foreign
  // is contacted the edge is certified clear and the shot arrives at p2; a
  // merge replaces both hulls and enqueues the bridge edges, which re-certify
  // everything the dropped remainder of this edge could still discover.
  const int x = forest_.find(t.owner1);
  const Hit hit = scene_.shoot(t.p1, t.p2, t.owner1,
                               [this, x](int o) { return forest_.find(o) == x; });
  ++stats_.rays;

  TraceEvent ev;
  ev.task = t;
  ev.hit = hit;
  ev.root_from = x;
  if (hit.obstacle_id >= 0) {
    const int xp = forest_.find(hit.obstacle_owner);
    ev.root_hit = xp;
    if (xp == x) throw std::logic_error("convexify: contact inside own component");
    auto na = live_.extract(x);
    auto nb = live_.extract(xp);
    MergeStats ms;
    ConvexPolygon merged =
        ConvexPolygon::merge(std::move(na.mapped()), std::move(nb.mapped()), &ms);
    forest_.merge(x, xp);
    const int root = forest_.find(x);
    merged.set_id(root);

    ++stats_.merges;
    if (ms.used_rebuild) ++stats_.rebuild_merges;
    stats_.max_boundary_crossings = std::max(stats_.max_boundary_crossings, ms.boundary_crossings);
    stats_.deleted_vertices += ms.deleted_vertices;

    for (const Segment& e : ms.new_edges) {
      const EdgeTask nt{e.a, e.b, owner_at(e.a), owner_at(e.b)};
      queue_.push_back(nt);
      ev.new_tasks.push_back(nt);
    }
    ev.merged = true;
    ev.root_new = root;
    ev.merged_hull = merged.vertices();
    live_.emplace(root, std::move(merged));
  }
  if (trace_) trace_(ev);
  return true;
}

Cover ConvexifyRun::finish() {
  while (step()) {
  }
  std::map<int, std::vector<int>> grouped;
  for (int i = 0; i < forest_.leaves(); ++i) grouped[forest_.find(i)].push_back(i);
  std::vector<CoverElement> elems;
  elems.reserve(grouped.size());
  for (auto& [root, ids] : grouped)
    elems.push_back(CoverElement{live_.at(root).vertices(), std::move(ids)});
  return cleanup_sweep(std::move(elems), &stats_.cleanup_folds);
}

// ---------------------------------------------------------------------------
// cleanup sweep
// ---------------------------------------------------------------------------

namespace {

struct SweepEdge {
  Point l, r;  // l.x < r.x strictly
  int elem = -1;
  bool upper = false;
  int eid = -1;  // unique; -1 marks the probe
};

Rational y_at(const SweepEdge& e, const Rational& x) {
  return e.l.y + (x - e.l.x) * (e.r.y - e.l.y) / (e.r.x - e.l.x);
}

Rational slope(const SweepEdge& e) { return (e.r.y - e.l.y) / (e.r.x - e.l.x); }

bool proper_cross(const SweepEdge& a, const SweepEdge& b) {
  const int o1 = static_cast<int>(orient(a.l, a.r, b.l));
  const int o2 = static_cast<int>(orient(a.l, a.r, b.r));
  const int o3 = static_cast<int>(orient(b.l, b.r, a.l));
  const int o4 = static_cast<int>(orient(b.l, b.r, a.r));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

Cover cleanup_sweep(std::vector<CoverElement> elements, int* folds) {
  const int n = static_cast<int>(elements.size());
  std::vector<SweepEdge> edges;
  struct Event {
    Rational x;
    int pri;  // 0 query, 1 remove, 2 insert: queries see edges ending here
    int idx;  // edge index for remove/insert, element index for query
  };
  std::vector<Event> events;

  for (int i = 0; i < n; ++i) {
    const Ring& h = elements[static_cast<std::size_t>(i)].hull;
    if (h.empty()) throw std::invalid_argument("cleanup_sweep: empty element");
    const Point lm = *std::min_element(h.begin(), h.end());
    events.push_back(Event{lm.x, 0, i});
    const std::size_t nedges = h.size() >= 3 ? h.size() : h.size() - 1;
    for (std::size_t j = 0; j < nedges; ++j) {
      const Point& a = h[j];
      const Point& b = h[(j + 1) % h.size()];
      if (a.x == b.x) continue;  // verticals are never strictly above a point
      SweepEdge e;
      e.l = std::min(a, b);
      e.r = std::max(a, b);
      e.elem = i;
      e.upper = b < a;  // ccw rings run right-to-left along the upper chain
      e.eid = static_cast<int>(edges.size());
      edges.push_back(e);
      events.push_back(Event{e.l.x, 2, e.eid});
      events.push_back(Event{e.r.x, 1, e.eid});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.pri != b.pri) return a.pri < b.pri;
    return a.idx < b.idx;
  });

  Rational sx(0);
  const auto cmp = [&sx](const SweepEdge& a, const SweepEdge& b) {
    const Rational ya = y_at(a, sx), yb = y_at(b, sx);
    if (ya != yb) return ya < yb;
    const Rational sa = slope(a), sb = slope(b);
    if (sa != sb) return sa < sb;
    if (a.elem != b.elem) return a.elem < b.elem;
    if (a.upper != b.upper) return a.upper < b.upper;
    return a.eid < b.eid;
  };
  std::set<SweepEdge, decltype(cmp)> status(cmp);

  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (const Event& ev : events) {
    sx = ev.x;
    if (ev.pri == 0) {
      const Ring& h = elements[static_cast<std::size_t>(ev.idx)].hull;
      const Point p = *std::min_element(h.begin(), h.end());
      SweepEdge probe;
      probe.l = p;
      probe.r = Point{p.x + Rational(1), p.y};
      auto it = status.upper_bound(probe);
      while (it != status.end() && y_at(*it, sx) == p.y) ++it;  // boundary contact
      if (it == status.end()) continue;
      const int k = it->elem;
      const bool k_solid = elements[static_cast<std::size_t>(k)].hull.size() >= 3;
      parent[static_cast<std::size_t>(ev.idx)] =
          (k_solid && it->upper) ? k : parent[static_cast<std::size_t>(k)];
    } else if (ev.pri == 1) {
      status.erase(edges[static_cast<std::size_t>(ev.idx)]);
    } else {
      const auto [it, ok] = status.insert(edges[static_cast<std::size_t>(ev.idx)]);
      if (!ok) throw std::logic_error("cleanup_sweep: duplicate boundary edge");
      if (it != status.begin() && proper_cross(*std::prev(it), *it))
        throw std::logic_error("cleanup_sweep: boundaries cross");
      if (std::next(it) != status.end() && proper_cross(*it, *std::next(it)))
        throw std::logic_error("cleanup_sweep: boundaries cross");
    }
  }

  // resolve to outermost containers
  std::vector<int> root(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int r = i;
    while (parent[static_cast<std::size_t>(r)] != -1) r = parent[static_cast<std::size_t>(r)];
    root[static_cast<std::size_t>(i)] = r;
  }
  int fold_count = 0;
  Cover out;
  for (int i = 0; i < n; ++i) {
    if (root[static_cast<std::size_t>(i)] != i) {
      ++fold_count;
      continue;
    }
    CoverElement el;
    el.hull = elements[static_cast<std::size_t>(i)].hull;
    for (int j = 0; j < n; ++j)
      if (root[static_cast<std::size_t>(j)] == i)
        el.covered.insert(el.covered.end(), elements[static_cast<std::size_t>(j)].covered.begin(),
                          elements[static_cast<std::size_t>(j)].covered.end());
    std::sort(el.covered.begin(), el.covered.end());
    out.elements.push_back(std::move(el));
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [](const CoverElement& a, const CoverElement& b) { return a.covered[0] < b.covered[0]; });
  if (folds) *folds = fold_count;
  return out;
}

// ---------------------------------------------------------------------------
// entry points
// ---------------------------------------------------------------------------

Cover convexify(const std::vector<Ring>& polygons, EngineKind kind, RunStats* stats,
                const TraceSink& trace) {
  ConvexifyRun run(polygons, kind);
  if (trace) run.set_trace_sink(trace);
  Cover cover = run.finish();
  if (stats) *stats = run.stats();
  return cover;
}

Cover convexify_segments(const std::vector<Segment>& segments, RunStats* stats) {
  if (segments.empty()) throw std::invalid_argument("convexify_segments: empty input");
  const int n = static_cast<int>(segments.size());
  for (const Segment& s : segments)
    if (s.a == s.b) throw std::invalid_argument("convexify_segments: degenerate segment");

  RunStats local;
  MergeForest comp(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (comp.same(i, j)) continue;
      if (segment_intersect(segments[static_cast<std::size_t>(i)],
                            segments[static_cast<std::size_t>(j)])
              .kind != SegmentIntersection::Kind::none)
        comp.merge(i, j);
    }

  struct Item {
    ConvexPolygon poly;
    std::vector<int> ids;
  };
  std::vector<Item> items;
  std::vector<std::vector<int>> groups = comp.groups();
  for (std::vector<int>& g : groups) {
    std::vector<Point> pts;
    for (const int id : g) {
      pts.push_back(segments[static_cast<std::size_t>(id)].a);
      pts.push_back(segments[static_cast<std::size_t>(id)].b);
    }
    const int pid = static_cast<int>(items.size());
    items.push_back(Item{ConvexPolygon::build(convex_hull(std::move(pts)), pid), std::move(g)});
  }

  // generic merge loop: any intersecting pair is replaced by its union hull
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < items.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < items.size() && !changed; ++j) {
        if (!items[i].poly.intersection_witness(items[j].poly)) continue;
        const Ring ra = items[i].poly.vertices();
        const Ring rb = items[j].poly.vertices();
        MergeStats ms;
        ConvexPolygon merged;
        try {
          merged = ConvexPolygon::merge(std::move(items[i].poly), std::move(items[j].poly), &ms);
        } catch (const PseudoDiskViolation&) {
          // hulls of far-apart components may cross more than twice
          std::vector<Point> pts(ra.begin(), ra.end());
          pts.insert(pts.end(), rb.begin(), rb.end());
          const Ring hull = convex_hull(std::move(pts));
          ms.used_rebuild = true;
          ms.deleted_vertices =
              static_cast<int>(ra.size() + rb.size()) - static_cast<int>(hull.size());
          merged = ConvexPolygon::build(hull, -1);
        }
        ++local.merges;
        if (ms.used_rebuild) ++local.rebuild_merges;
        local.max_boundary_crossings = std::max(local.max_boundary_crossings, ms.boundary_crossings);
        local.deleted_vertices += ms.deleted_vertices;

        std::vector<int> ids = std::move(items[i].ids);
        ids.insert(ids.end(), items[j].ids.begin(), items[j].ids.end());
        std::sort(ids.begin(), ids.end());
        merged.set_id(static_cast<int>(i));
        items[i] = Item{std::move(merged), std::move(ids)};
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
  }

  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.ids[0] < b.ids[0]; });
  Cover out;
  for (const Item& it : items) out.elements.push_back(CoverElement{it.poly.vertices(), it.ids});
  if (stats) *stats = local;
  return out;
}

}  // namespace convexcover
