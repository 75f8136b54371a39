#pragma once

#include <deque>
#include <functional>
#include <map>
#include <vector>

#include "convexcover/forest.hpp"
#include "convexcover/hull_chain.hpp"
#include "convexcover/ray_engine.hpp"

namespace convexcover {

// A hull edge that still has to be certified by a ray shot from p1 toward p2.
// owner1/owner2 are the ids of the input polygons the endpoints came from.
struct EdgeTask {
  Point p1, p2;
  int owner1 = -1;
  int owner2 = -1;
};

struct CoverElement {
  Ring hull;                 // counterclockwise; sizes 1-2 for degenerates
  std::vector<int> covered;  // ascending input ids
};

struct Cover {
  std::vector<CoverElement> elements;
  Rational total_area() const;
};

struct RunStats {
  int initial_tasks = 0;
  int tasks_processed = 0;
  int rays = 0;
  int merges = 0;
  int rebuild_merges = 0;
  int max_boundary_crossings = 0;   // per-merge maximum
  long long deleted_vertices = 0;   // sum over merges
  long long initial_hull_vertices = 0;
  int cleanup_folds = 0;            // nested hulls absorbed by the final sweep
};

// One processed task: the shot, where it landed, and what it caused.
struct TraceEvent {
  EdgeTask task;
  Hit hit;
  int root_from = -1;  // component of the shooter before the merge
  int root_hit = -1;   // component that was hit; -1 when the shot arrived
  int root_new = -1;   // component holding the union after a merge
  bool merged = false;
  Ring merged_hull;                 // set when merged
  std::vector<EdgeTask> new_tasks;  // at most two
};
using TraceSink = std::function<void(const TraceEvent&)>;

// The convexification pipeline, stepwise for inspection. Polygons must be
// simple and pairwise disjoint (validated up front; the quadratic
// disjointness check is skipped on large inputs).
class ConvexifyRun {
 public:
  ConvexifyRun(const std::vector<Ring>& polygons, EngineKind kind);

  // Processes one queued edge task; false when the queue is empty.
  bool step();

  // Drains the queue, then folds nested hulls. Call once.
  Cover finish();

  const std::deque<EdgeTask>& queue() const { return queue_; }
  const MergeForest& forest() const { return forest_; }
  const RunStats& stats() const { return stats_; }
  const Scene& scene() const { return scene_; }
  const std::map<int, ConvexPolygon>& live() const { return live_; }
  void set_trace_sink(TraceSink sink) { trace_ = std::move(sink); }

 private:
  int owner_at(const Point& p) const;

  Scene scene_;
  MergeForest forest_;
  std::map<int, ConvexPolygon> live_;  // union-find root -> current hull
  std::deque<EdgeTask> queue_;
  std::map<Point, int> vertex_owner_;
  RunStats stats_;
  TraceSink trace_;
};

// Folds every hull that lies nested inside another into its outermost
// container by a left-to-right sweep; input boundaries must be pairwise
// non-crossing. Throws std::logic_error when a crossing is detected.
Cover cleanup_sweep(std::vector<CoverElement> elements, int* folds = nullptr);

// The unique minimum-area disjoint convex cover of simple, pairwise disjoint
// polygons.
Cover convexify(const std::vector<Ring>& polygons, EngineKind kind = EngineKind::grid,
                RunStats* stats = nullptr, const TraceSink& trace = {});

// Cover of an arbitrary set of proper segments: connected components of the
// crossing/touching graph are hulled, then intersecting hulls are merged to a
// fixpoint. Isolated segments yield degenerate (zero-area) elements.
// Throws std::invalid_argument on an empty set.
Cover convexify_segments(const std::vector<Segment>& segments, RunStats* stats = nullptr);

}  // namespace convexcover
