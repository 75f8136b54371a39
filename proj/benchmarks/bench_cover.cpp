// Kernel and pipeline benchmarks: hull merging, permanent ray shooting with
// both engines, and full covers on the merge-free and merge-heavy families.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "convexcover/convexify.hpp"
#include "convexcover/geom.hpp"
#include "convexcover/hull_chain.hpp"
#include "convexcover/instance.hpp"
#include "convexcover/ray_engine.hpp"
#include "support/corpus.hpp"

using namespace convexcover;
using corpus::ipt;

namespace {

// Strictly convex ~k-gon: lattice roundings of a circle, hulled.
Ring lattice_circle(int k, long radius, long cx, long cy) {
  std::vector<Point> pts;
  const double two_pi = 8.0 * std::atan(1.0);
  for (int i = 0; i < k; ++i) {
    const double t = two_pi * i / k;
    pts.push_back(ipt(cx + static_cast<long>(std::llround(radius * std::cos(t))),
                      cy + static_cast<long>(std::llround(radius * std::sin(t)))));
  }
  return convex_hull(std::move(pts));
}

// Star edges plus a floor below them, so a downward probe always terminates.
Scene star_scene(int stars, unsigned seed, EngineKind kind) {
  std::mt19937_64 rng(seed);
  const std::vector<Ring> rings = corpus::star_field(stars, rng);
  std::vector<Obstacle> obs;
  for (std::size_t p = 0; p < rings.size(); ++p)
    for (std::size_t i = 0; i < rings[p].size(); ++i)
      obs.push_back({Segment{rings[p][i], rings[p][(i + 1) % rings[p].size()]},
                     static_cast<int>(p), -1});
  obs.push_back(
      {Segment{ipt(-1, -20), ipt(18L * stars + 1, -20)}, static_cast<int>(rings.size()), -1});
  return Scene(kind, std::move(obs));
}

void merge_pair(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const long r = 4L * k;
  const Ring a = lattice_circle(k, r, 0, 0);
  const Ring b = lattice_circle(k, r, r, r / 3);  // boundaries cross twice
  for (auto _ : state) {
    ConvexPolygon merged =
        ConvexPolygon::merge(ConvexPolygon::build(a, 0), ConvexPolygon::build(b, 1));
    benchmark::DoNotOptimize(merged.vertex_count());
  }
  state.SetItemsProcessed(state.iterations() * (a.size() + b.size()));
}

void shoot_rays(benchmark::State& state, EngineKind kind) {
  const int stars = static_cast<int>(state.range(0));
  constexpr int kRays = 64;
  const long span = 18L * stars;
  for (auto _ : state) {
    state.PauseTiming();
    Scene scene = star_scene(stars, 9, kind);
    std::mt19937_64 rng(17);
    state.ResumeTiming();
    for (int i = 0; i < kRays; ++i) {
      const long x = static_cast<long>(rng() % span);
      benchmark::DoNotOptimize(scene.shoot(ipt(x, 20), ipt(x, -20), 1000 + i));
    }
  }
  state.SetItemsProcessed(state.iterations() * kRays);
}

void shoot_rays_naive(benchmark::State& state) { shoot_rays(state, EngineKind::naive); }
void shoot_rays_grid(benchmark::State& state) { shoot_rays(state, EngineKind::grid); }

void cover_cascade(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const std::vector<Ring> polys = corpus::staircase(k);
  for (auto _ : state) {
    RunStats stats;
    benchmark::DoNotOptimize(convexify(polys, EngineKind::grid, &stats));
  }
  state.SetItemsProcessed(state.iterations() * 6 * k);
}

void cover_stars(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const long g = static_cast<long>(std::ceil(std::sqrt(double(n))));
  const InstanceFile inst = gen_instance(n, 12, 26 * g, 5);
  for (auto _ : state) {
    RunStats stats;
    benchmark::DoNotOptimize(convexify(inst.polygons, EngineKind::grid, &stats));
  }
  state.SetItemsProcessed(state.iterations() * 12 * n);
}

}  // namespace

BENCHMARK(merge_pair)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(shoot_rays_naive)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(shoot_rays_grid)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(cover_cascade)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(cover_stars)->Arg(64)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
