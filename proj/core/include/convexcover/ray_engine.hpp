#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <vector>

#include "convexcover/geom.hpp"

namespace convexcover {

enum class EngineKind { naive, grid };

// A permanent scene segment: an original polygon edge or a previously shot
// ray. Obstacles are interior-disjoint except at shared endpoints.
struct Obstacle {
  Segment seg;
  int owner = -1;  // input polygon id for edges, origin-component id for rays
  int id = -1;     // insertion order; breaks ties deterministically
};

struct RayQuery {
  Point from;
  Point toward;
  int self_owner = -1;
};

// obstacle_id == -1 means the shot arrived at its target unobstructed (only
// possible under an owner filter); point is then the target itself.
struct Hit {
  Point point;
  int obstacle_id = -1;
  int obstacle_owner = -1;
};

// Obstacles whose owner satisfies the filter are invisible to the shot.
using OwnerFilter = std::function<bool(int owner)>;

// Permanent ray-shooting scene: every shot's traced segment is inserted as a
// new obstacle. The acceleration engine is chosen at construction and never
// changes the observable hit sequence.
class Scene {
 public:
  Scene(EngineKind kind, std::vector<Obstacle> initial);
  ~Scene();
  Scene(Scene&&) noexcept;
  Scene& operator=(Scene&&) noexcept;
  Scene(const Scene&) = delete;
  Scene& operator=(const Scene&) = delete;

  // One obstacle per edge of each ring, labeled with the ring's index.
  static Scene from_polygons(const std::vector<Ring>& polygons, EngineKind kind);

  // First obstacle contact strictly after `from` along (from, toward]; among
  // obstacles through that point the smallest id wins; a collinear graze
  // counts from the near end of the overlap (the far end when the overlap
  // starts at `from` itself). Obstacles whose owner satisfies `skip` are
  // passed through as if absent. The traced segment from -> hit is inserted
  // permanently, labeled self_owner. When every contact is filtered out the
  // shot arrives: the Hit carries point == toward and obstacle_id == -1.
  // Without a filter, hitting nothing means the caller aimed outside the
  // scene's geometry, which throws std::logic_error.
  Hit shoot(const Point& from, const Point& toward, int self_owner,
            const OwnerFilter& skip = {});

  std::size_t size() const { return obstacles_.size(); }
  const Obstacle& obstacle(std::size_t id) const { return obstacles_.at(id); }
  EngineKind engine() const { return kind_; }

  // Record/replay hook: observes every (query, hit) pair.
  void set_record_sink(std::function<void(const RayQuery&, const Hit&)> sink);

 private:
  class Engine;
  class NaiveEngine;
  class GridEngine;

  EngineKind kind_;
  std::deque<Obstacle> obstacles_;  // stable storage; index == id
  std::unique_ptr<Engine> engine_;
  std::function<void(const RayQuery&, const Hit&)> sink_;
};

}  // namespace convexcover
