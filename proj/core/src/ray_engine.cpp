#include "convexcover/ray_engine.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace convexcover {

namespace {

// Parameter of p along a->b (p must lie on the line through a and b).
Rational line_param(const Point& a, const Point& b, const Point& p) {
  if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
  return (p.y - a.y) / (b.y - a.y);
}

// Contact of the closed obstacle with the half-open shot (from, toward]:
// the smallest parameter of the contact set, except that an overlap starting
// at `from` yields its far end (the ray slides along the obstacle).
std::optional<std::pair<Rational, Point>> contact(const Point& from, const Point& toward,
                                                  const Segment& o) {
  const auto res = segment_intersect({from, toward}, o);
  switch (res.kind) {
    case SegmentIntersection::Kind::none:
      return std::nullopt;
    case SegmentIntersection::Kind::point: {
      const Rational t = line_param(from, toward, res.p);
      if (t.sign() <= 0) return std::nullopt;
      return std::make_pair(t, res.p);
    }
    case SegmentIntersection::Kind::overlap: {
      Rational ta = line_param(from, toward, res.span.a);
      Rational tb = line_param(from, toward, res.span.b);
      Point pa = res.span.a, pb = res.span.b;
      if (tb < ta) {
        std::swap(ta, tb);
        std::swap(pa, pb);
      }
      if (ta.sign() > 0) return std::make_pair(ta, pa);
      return std::make_pair(tb, pb);  // graze from the start: far end
    }
  }
  return std::nullopt;
}

struct Best {
  bool found = false;
  Rational t;
  Point point;
  int id = -1;

  void offer(const Rational& ct, const Point& cp, int cid) {
    if (!found || ct < t || (ct == t && cid < id)) {
      found = true;
      t = ct;
      point = cp;
      id = cid;
    }
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// engines
// ---------------------------------------------------------------------------

class Scene::Engine {
 public:
  virtual ~Engine() = default;
  virtual void insert(int id) = 0;
  virtual Best query(const Point& from, const Point& toward, const OwnerFilter& skip) = 0;
  // The owning Scene is movable; the storage pointer follows it.
  void rebind(const std::deque<Obstacle>* obstacles) { obs_ = obstacles; }

 protected:
  explicit Engine(const std::deque<Obstacle>* obstacles) : obs_(obstacles) {}
  const std::deque<Obstacle>& obstacles() const { return *obs_; }

 private:
  const std::deque<Obstacle>* obs_;
};

class Scene::NaiveEngine : public Scene::Engine {
 public:
  explicit NaiveEngine(const std::deque<Obstacle>* obstacles) : Engine(obstacles) {}

  void insert(int) override {}

  Best query(const Point& from, const Point& toward, const OwnerFilter& skip) override {
    Best best;
    for (const Obstacle& o : obstacles()) {
      if (skip && skip(o.owner)) continue;
      if (const auto c = contact(from, toward, o.seg)) best.offer(c->first, c->second, o.id);
    }
    return best;
  }
};

// Uniform grid over the initial integer bounding box. Cell size is an
// integer; the lattice origin never moves, only the resolution changes when
// average occupancy crosses the rebuild threshold. The lattice walk runs on
// raw integers — crossing parameters form arithmetic progressions and cell
// indices come from one floor division each — so no rational is ever
// canonicalized per cell. Contact tests stay exact; the grid is purely an
// acceleration index.
class Scene::GridEngine : public Scene::Engine {
 public:
  explicit GridEngine(const std::deque<Obstacle>* obstacles) : Engine(obstacles) {
    if (!this->obstacles().empty()) {
      minx_ = maxx_ = this->obstacles().front().seg.a.x;
      miny_ = maxy_ = this->obstacles().front().seg.a.y;
      for (const Obstacle& o : this->obstacles())
        for (const Point* p : {&o.seg.a, &o.seg.b}) {
          minx_ = std::min(minx_, p->x);
          maxx_ = std::max(maxx_, p->x);
          miny_ = std::min(miny_, p->y);
          maxy_ = std::max(maxy_, p->y);
        }
    }
    ox_ = minx_.floor();
    oy_ = miny_.floor();
    rebuild(static_cast<long>(this->obstacles().size()));
    for (const Obstacle& o : this->obstacles()) place(o.id);
  }

  void insert(int id) override {
    place(id);
    // Re-grid only after the scene doubles: occupancy alone may stay high
    // forever (long obstacles touch many cells), and re-placing everything on
    // each insert would be quadratic.
    const long n = static_cast<long>(obstacles().size());
    if (refs_ > kMaxAvgOccupancy * gw_ * gh_ && n >= 2 * built_n_) {
      rebuild(n);
      for (const Obstacle& o : obstacles()) place(o.id);
    }
  }

  Best query(const Point& from, const Point& toward, const OwnerFilter& skip) override {
    Best best;
    ++stamp_epoch_;
    stamps_.resize(obstacles().size(), 0);
    Walker w(*this, Segment{from, toward});
    std::vector<long> cs;
    const auto scan = [&](const Frac& t) {
      w.cells_at(t, &cs);
      for (const long c : cs)
        for (const int id : cells_[static_cast<std::size_t>(c)]) {
          if (stamps_[static_cast<std::size_t>(id)] == stamp_epoch_) continue;
          stamps_[static_cast<std::size_t>(id)] = stamp_epoch_;
          if (skip && skip(obstacles()[static_cast<std::size_t>(id)].owner)) continue;
          if (const auto hit = contact(from, toward, obstacles()[static_cast<std::size_t>(id)].seg))
            best.offer(hit->first, hit->second, id);
        }
    };
    Frac cur{Int(0), Int(1)};
    scan(cur);  // cells of the start point
    for (;;) {
      if (best.found && frac_leq(best.t, cur)) break;  // nothing later can win
      const std::optional<Frac> nx = w.next_crossing();
      const Frac nxt = nx ? *nx : Frac{Int(1), Int(1)};
      scan(midpoint(cur, nxt));
      scan(nxt);
      if (!nx) break;
      cur = nxt;
    }
    return best;
  }

 private:
  static constexpr long kMaxAvgOccupancy = 8;

  // Exact fraction p/q with q > 0, compared by cross-multiplication and never
  // canonicalized, so the walk performs no gcds.
  struct Frac {
    Int p, q;
  };
  static int frac_cmp(const Frac& a, const Frac& b) { return cmp(Int(a.p * b.q), Int(b.p * a.q)); }
  static bool frac_leq(const Rational& r, const Frac& f) {
    return cmp(Int(r.num() * f.q), Int(f.p * r.den())) <= 0;
  }
  static Frac midpoint(const Frac& a, const Frac& b) {
    return Frac{a.p * b.q + b.p * a.q, a.q * b.q * 2};
  }

  // One coordinate of a walked segment: the value at parameter t = p/q is
  // (na·q·db + p·C0) / (q·da·db), and the lattice crossings of this axis are
  // the increasing progression t_k = (A + kB)/C for k in [k, khi] (B, C > 0;
  // 0 < t_k < 1). A constant coordinate has no crossings and C0 = 0.
  struct Axis {
    Int na, da, db, C0;
    Int o, s;
    long dim;
    Int A, B, C, k, khi;

    Axis(const Rational& va, const Rational& vb, const Int& origin, const Int& side, long d)
        : na(va.num()),
          da(va.den()),
          db(vb.den()),
          C0(vb.num() * da - na * db),
          o(origin),
          s(side),
          dim(d) {
      if (C0 != 0) {
        A = (o * da - na) * db;
        B = s * da * db;
        C = C0;
        if (C < 0) {
          A = -A;
          B = -B;
          C = -C;
        }
        if (B < 0) B = -B;  // reindexing k -> -k keeps the same value set
        mpz_fdiv_q(k.get_mpz_t(), Int(-A).get_mpz_t(), B.get_mpz_t());
        k += 1;
        mpz_fdiv_q(khi.get_mpz_t(), Int(C - A - 1).get_mpz_t(), B.get_mpz_t());
      } else {
        k = 1;
        khi = 0;
      }
    }
    bool done() const { return k > khi; }
    Frac head() const { return Frac{A + k * B, C}; }
    void pop() { k += 1; }

    // Cells whose closed square contains the coordinate at t: one, or two
    // when it lies exactly on an interior lattice line.
    int cells(const Frac& t, long out[2]) const {
      const Int den = t.q * da * db;
      const Int adj = na * t.q * db + t.p * C0 - o * den;
      Int raw, rem;
      const Int div = s * den;
      mpz_fdiv_qr(raw.get_mpz_t(), rem.get_mpz_t(), adj.get_mpz_t(), div.get_mpz_t());
      long c;
      if (raw < 0)
        c = 0;
      else if (raw >= dim)
        c = dim - 1;
      else
        c = static_cast<long>(raw.get_si());
      out[0] = c;
      int n = 1;
      if (rem == 0 && raw == c && c > 0) out[n++] = c - 1;  // on the boundary line
      return n;
    }
  };

  // Merged interval walk over both axes of one segment.
  class Walker {
   public:
    Walker(const GridEngine& g, const Segment& seg)
        : gw_(g.gw_),
          ax_(seg.a.x, seg.b.x, g.ox_, g.side_, g.gw_),
          ay_(seg.a.y, seg.b.y, g.oy_, g.side_, g.gh_) {}

    // Strictly increasing crossing parameters in (0, 1); corners dedupe.
    std::optional<Frac> next_crossing() {
      const bool hx = !ax_.done(), hy = !ay_.done();
      if (!hx && !hy) return std::nullopt;
      if (hx && hy) {
        const Frac fx = ax_.head(), fy = ay_.head();
        const int c = frac_cmp(fx, fy);
        if (c == 0) {
          ax_.pop();
          ay_.pop();
          return fx;
        }
        if (c < 0) {
          ax_.pop();
          return fx;
        }
        ay_.pop();
        return fy;
      }
      Axis& a = hx ? ax_ : ay_;
      const Frac f = a.head();
      a.pop();
      return f;
    }

    // Linear ids of the cells whose closed square contains the point at t.
    void cells_at(const Frac& t, std::vector<long>* out) const {
      long xs[2], ys[2];
      const int nx = ax_.cells(t, xs);
      const int ny = ay_.cells(t, ys);
      out->clear();
      for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) out->push_back(ys[b] * gw_ + xs[a]);
    }

   private:
    long gw_;
    Axis ax_, ay_;
  };

  void rebuild(long n) {
    built_n_ = std::max(n, 1L);
    long g = 1;
    while (g * g < std::max(n, 1L)) ++g;
    const Rational w = maxx_ - Rational(ox_);
    const Rational h = maxy_ - Rational(oy_);
    side_ = std::max(Int(1), ceil_div(std::max(w, h), g));
    gw_ = extent(w);
    gh_ = extent(h);
    cells_.assign(static_cast<std::size_t>(gw_ * gh_), {});
    refs_ = 0;
  }

  static Int ceil_div(const Rational& v, long g) {
    const Rational q = v / Rational(g);
    Int f = q.floor();
    if (Rational(f) < q) f += 1;
    return f;
  }

  long extent(const Rational& w) const {
    const Rational q = w / Rational(side_);
    long cells = static_cast<long>(q.floor().get_si()) + 1;
    return std::max(cells, 1L);
  }

  // Every interval midpoint's cells get the obstacle; closed-square coverage
  // of the midpoints covers every point of the segment.
  void place(int id) {
    const Segment& s = obstacles()[static_cast<std::size_t>(id)].seg;
    Walker w(*this, s);
    ++stamp_epoch_;
    place_marks_.resize(cells_.size(), 0);
    std::vector<long> cs;
    Frac cur{Int(0), Int(1)};
    for (;;) {
      const std::optional<Frac> nx = w.next_crossing();
      const Frac nxt = nx ? *nx : Frac{Int(1), Int(1)};
      w.cells_at(midpoint(cur, nxt), &cs);
      for (const long c : cs) {
        auto& mark = place_marks_[static_cast<std::size_t>(c)];
        if (mark == stamp_epoch_) continue;
        mark = stamp_epoch_;
        cells_[static_cast<std::size_t>(c)].push_back(id);
        ++refs_;
      }
      if (!nx) break;
      cur = nxt;
    }
  }

  Rational minx_, maxx_, miny_, maxy_;
  Int ox_, oy_;  // lattice origin (integral, fixed)
  Int side_;     // integral cell side, >= 1
  long gw_ = 1, gh_ = 1;
  long built_n_ = 1;  // obstacle count at the last rebuild
  std::vector<std::vector<int>> cells_;
  long refs_ = 0;
  std::vector<int> stamps_;       // per-obstacle dedupe marks
  std::vector<int> place_marks_;  // per-cell dedupe marks during insertion
  int stamp_epoch_ = 0;
};

// ---------------------------------------------------------------------------
// scene
// ---------------------------------------------------------------------------

Scene::Scene(EngineKind kind, std::vector<Obstacle> initial) : kind_(kind) {
  for (Obstacle& o : initial) {
    if (o.seg.a == o.seg.b) throw std::invalid_argument("Scene: degenerate obstacle");
    o.id = static_cast<int>(obstacles_.size());
    obstacles_.push_back(std::move(o));
  }
  if (kind_ == EngineKind::naive)
    engine_ = std::make_unique<NaiveEngine>(&obstacles_);
  else
    engine_ = std::make_unique<GridEngine>(&obstacles_);
}

Scene::~Scene() = default;

Scene::Scene(Scene&& other) noexcept
    : kind_(other.kind_),
      obstacles_(std::move(other.obstacles_)),
      engine_(std::move(other.engine_)),
      sink_(std::move(other.sink_)) {
  if (engine_) engine_->rebind(&obstacles_);
}

Scene& Scene::operator=(Scene&& other) noexcept {
  if (this != &other) {
    kind_ = other.kind_;
    obstacles_ = std::move(other.obstacles_);
    engine_ = std::move(other.engine_);
    sink_ = std::move(other.sink_);
    if (engine_) engine_->rebind(&obstacles_);
  }
  return *this;
}

Scene Scene::from_polygons(const std::vector<Ring>& polygons, EngineKind kind) {
  std::vector<Obstacle> obs;
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    const Ring& r = polygons[i];
    for (std::size_t j = 0; j < r.size(); ++j)
      obs.push_back({Segment{r[j], r[(j + 1) % r.size()]}, static_cast<int>(i), -1});
  }
  return Scene(kind, std::move(obs));
}

Hit Scene::shoot(const Point& from, const Point& toward, int self_owner,
                 const OwnerFilter& skip) {
  if (from == toward) throw std::invalid_argument("shoot: zero-length ray");
  const Best best = engine_->query(from, toward, skip);
  if (!best.found && !skip) throw std::logic_error("shoot: ray escaped the scene");
  // With every contact filtered out the shot arrives at its target.
  const Hit hit = best.found
                      ? Hit{best.point, best.id, obstacles_[static_cast<std::size_t>(best.id)].owner}
                      : Hit{toward, -1, -1};
  // the hit parameter is strictly positive, so the traced segment is proper
  obstacles_.push_back({Segment{from, hit.point}, self_owner, static_cast<int>(obstacles_.size())});
  engine_->insert(obstacles_.back().id);
  if (sink_) sink_(RayQuery{from, toward, self_owner}, hit);
  return hit;
}

void Scene::set_record_sink(std::function<void(const RayQuery&, const Hit&)> sink) {
  sink_ = std::move(sink);
}

}  // namespace convexcover
