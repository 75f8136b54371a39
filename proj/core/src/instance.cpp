#include "convexcover/instance.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "json.hpp"

namespace convexcover {

namespace {

using ordered_json = nlohmann::ordered_json;

// Mirrors the solver's validation gates: quadratic checks are run only on
// inputs small enough that they stay cheap; larger instances are trusted.
constexpr int kSimpleCheckLimit = 512;    // vertices per ring
constexpr int kDisjointCheckLimit = 64;   // polygons per instance

std::pair<int, int> line_col_at(const std::string& bytes, std::size_t pos) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < pos && i < bytes.size(); ++i) {
    if (bytes[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, 0, 0); }

ordered_json parse_json(const std::string& bytes) {
  try {
    return ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col_at(bytes, e.byte);
    throw ParseError(e.what(), line, col);
  }
}

long int_coord(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + ": non-integer coordinate");
  return v.get<long>();
}

Point point_at(const ordered_json& pair, const std::string& where) {
  if (!pair.is_array() || pair.size() != 2) fail(where + ": expected [x, y]");
  return Point{Rational(Int(int_coord(pair[0], where))),
               Rational(Int(int_coord(pair[1], where)))};
}

long coord_out(const Rational& r, const std::string& where) {
  if (!r.is_integer() || !r.num().fits_slong_p())
    throw std::invalid_argument(where + ": coordinate is not a small integer");
  return r.num().get_si();
}

// 53 uniform bits in [0, 1).
double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) +
                                        ", column " + std::to_string(column) + ")"
                                  : msg),
      line_(line),
      column_(column) {}

InstanceFile parse_instance(const std::string& bytes) {
  const ordered_json j = parse_json(bytes);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail("instance: missing \"kind\"");
  const std::string kind = j["kind"].get<std::string>();

  InstanceFile inst;
  if (kind == "polygons") {
    inst.kind = InstanceKind::polygons;
    if (!j.contains("polygons") || !j["polygons"].is_array())
      fail("instance: missing \"polygons\" array");
    int idx = 0;
    for (const ordered_json& ring_j : j["polygons"]) {
      const std::string where = "polygon " + std::to_string(idx);
      if (!ring_j.is_array() || ring_j.size() < 3)
        fail(where + ": a ring needs at least 3 vertices");
      Ring ring;
      for (const ordered_json& v : ring_j) ring.push_back(point_at(v, where));
      const Rational area = polygon_area(ring);
      if (area.sign() == 0) fail(where + ": ring has zero area");
      if (area.sign() < 0) std::reverse(ring.begin(), ring.end());
      if (static_cast<int>(ring.size()) <= kSimpleCheckLimit &&
          !is_simple_polygon(ring))
        fail(where + ": ring is not simple");
      inst.polygons.push_back(std::move(ring));
      ++idx;
    }
    const int n = static_cast<int>(inst.polygons.size());
    if (n <= kDisjointCheckLimit) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (!polygons_disjoint(inst.polygons[a], inst.polygons[b]))
            fail("polygons " + std::to_string(a) + " and " + std::to_string(b) +
                 " overlap");
    }
  } else if (kind == "segments") {
    inst.kind = InstanceKind::segments;
    if (!j.contains("segments") || !j["segments"].is_array())
      fail("instance: missing \"segments\" array");
    int idx = 0;
    for (const ordered_json& seg_j : j["segments"]) {
      const std::string where = "segment " + std::to_string(idx);
      if (!seg_j.is_array() || seg_j.size() != 2)
        fail(where + ": expected [[x1, y1], [x2, y2]]");
      Segment s{point_at(seg_j[0], where), point_at(seg_j[1], where)};
      if (s.a == s.b) fail(where + ": zero-length segment");
      inst.segments.push_back(std::move(s));
      ++idx;
    }
  } else {
    fail("instance: kind must be \"polygons\" or \"segments\"");
  }
  return inst;
}

std::string emit_instance(const InstanceFile& inst) {
  std::ostringstream out;
  const auto xy = [&out](const Point& p) {
    out << '[' << coord_out(p.x, "emit_instance") << ','
        << coord_out(p.y, "emit_instance") << ']';
  };
  if (inst.kind == InstanceKind::polygons) {
    out << "{\n  \"kind\": \"polygons\",\n  \"polygons\": [";
    for (std::size_t i = 0; i < inst.polygons.size(); ++i) {
      out << (i ? ",\n    [" : "\n    [");
      for (std::size_t k = 0; k < inst.polygons[i].size(); ++k) {
        if (k) out << ',';
        xy(inst.polygons[i][k]);
      }
      out << ']';
    }
    out << (inst.polygons.empty() ? "]\n}\n" : "\n  ]\n}\n");
  } else {
    out << "{\n  \"kind\": \"segments\",\n  \"segments\": [";
    for (std::size_t i = 0; i < inst.segments.size(); ++i) {
      out << (i ? ",\n    [" : "\n    [");
      xy(inst.segments[i].a);
      out << ',';
      xy(inst.segments[i].b);
      out << ']';
    }
    out << (inst.segments.empty() ? "]\n}\n" : "\n  ]\n}\n");
  }
  return out.str();
}

Cover parse_cover(const std::string& bytes) {
  const ordered_json j = parse_json(bytes);
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    fail("cover: missing \"elements\" array");
  Cover cover;
  int idx = 0;
  for (const ordered_json& el : j["elements"]) {
    const std::string where = "element " + std::to_string(idx);
    if (!el.is_object() || !el.contains("vertices") || !el["vertices"].is_array() ||
        !el.contains("covered") || !el["covered"].is_array())
      fail(where + ": expected {\"vertices\": [...], \"covered\": [...]}");
    CoverElement out;
    for (const ordered_json& v : el["vertices"]) {
      if (!v.is_object() || !v.contains("x") || !v.contains("y") ||
          !v["x"].is_string() || !v["y"].is_string())
        fail(where + ": vertices need exact \"x\" and \"y\" strings");
      try {
        out.hull.push_back(Point{Rational::parse(v["x"].get<std::string>()),
                                 Rational::parse(v["y"].get<std::string>())});
      } catch (const std::invalid_argument& e) {
        fail(where + ": " + e.what());
      }
    }
    if (out.hull.empty()) fail(where + ": empty vertex list");
    for (const ordered_json& c : el["covered"]) {
      if (!c.is_number_integer() || c.get<long long>() < 0)
        fail(where + ": covered indices must be nonnegative integers");
      out.covered.push_back(c.get<int>());
    }
    if (out.covered.empty()) fail(where + ": element covers no input");
    cover.elements.push_back(std::move(out));
    ++idx;
  }
  if (!j.contains("total_area") || !j["total_area"].is_string())
    fail("cover: missing \"total_area\" string");
  Rational recorded;
  try {
    recorded = Rational::parse(j["total_area"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(std::string("cover: ") + e.what());
  }
  if (recorded != cover.total_area())
    fail("cover: recorded total_area " + recorded.str() +
         " does not match the recomputed area " + cover.total_area().str());
  return cover;
}

std::string emit_cover(const Cover& cover) {
  std::ostringstream out;
  out << "{\n  \"elements\": [";
  for (std::size_t i = 0; i < cover.elements.size(); ++i) {
    const CoverElement& el = cover.elements[i];
    out << (i ? ",\n    {\n" : "\n    {\n") << "      \"vertices\": [\n";
    for (std::size_t k = 0; k < el.hull.size(); ++k) {
      const Point& p = el.hull[k];
      char xd[32], yd[32];
      std::snprintf(xd, sizeof xd, "%.12g", p.x.to_double());
      std::snprintf(yd, sizeof yd, "%.12g", p.y.to_double());
      out << "        {\"x\": \"" << p.x.str() << "\", \"y\": \"" << p.y.str()
          << "\", \"xd\": " << xd << ", \"yd\": " << yd << '}'
          << (k + 1 < el.hull.size() ? ",\n" : "\n");
    }
    out << "      ],\n      \"covered\": [";
    for (std::size_t k = 0; k < el.covered.size(); ++k)
      out << (k ? "," : "") << el.covered[k];
    out << "]\n    }";
  }
  out << (cover.elements.empty() ? "],\n" : "\n  ],\n");
  out << "  \"total_area\": \"" << cover.total_area().str() << "\"\n}\n";
  return out.str();
}

InstanceFile gen_instance(int n_polygons, int vertices, long bbox, unsigned seed) {
  if (n_polygons < 1 || vertices < 3 || bbox < 1)
    throw std::invalid_argument("gen_instance: parameters must be positive");
  const long g = static_cast<long>(std::ceil(std::sqrt(double(n_polygons))));
  const long cell = bbox / g;
  // A v-vertex lattice star needs circumference roughly 2v; 1-unit margins
  // between cell interiors keep distinct cells' polygons strictly apart.
  if (cell < 6 || 3 * (cell - 2) < 2 * static_cast<long>(vertices))
    throw std::invalid_argument("gen_instance: infeasible packing parameters");

  std::mt19937_64 rng(seed);
  InstanceFile inst;
  inst.kind = InstanceKind::polygons;
  const double two_pi = 8.0 * std::atan(1.0);
  for (int i = 0; i < n_polygons; ++i) {
    const long ox = (i % g) * cell;
    const long oy = (i / g) * cell;
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      const long jit = cell / 8;
      const long cx = ox + cell / 2 + (jit > 0 ? long(rng() % (2 * jit + 1)) - jit : 0);
      const long cy = oy + cell / 2 + (jit > 0 ? long(rng() % (2 * jit + 1)) - jit : 0);
      const long rmax = std::min(std::min(cx - (ox + 1), ox + cell - 1 - cx),
                                 std::min(cy - (oy + 1), oy + cell - 1 - cy));
      if (rmax < 2) continue;
      Ring ring;
      for (int k = 0; k < vertices; ++k) {
        const double theta = two_pi * (k + 0.2 + 0.6 * u01(rng)) / vertices;
        const double r = double(rmax) * (0.45 + 0.55 * u01(rng));
        ring.push_back(Point{Rational(Int(cx + static_cast<long>(std::llround(r * std::cos(theta))))),
                             Rational(Int(cy + static_cast<long>(std::llround(r * std::sin(theta)))))});
      }
      if (polygon_area(ring).sign() <= 0) continue;
      if (static_cast<int>(ring.size()) <= kSimpleCheckLimit && !is_simple_polygon(ring))
        continue;
      inst.polygons.push_back(std::move(ring));
      placed = true;
    }
    if (!placed)
      throw std::invalid_argument("gen_instance: infeasible packing parameters");
  }
  return inst;
}

}  // namespace convexcover
