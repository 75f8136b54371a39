#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "convexcover/convexify.hpp"
#include "convexcover/geom.hpp"

namespace convexcover {

// Malformed instance or cover text. line/column locate the first offending
// byte for syntax errors and are 0 for semantic errors (those carry the
// offending polygon/segment index in the message instead).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

enum class InstanceKind { polygons, segments };

// A problem instance: either disjoint simple polygons or a bag of segments.
// Integer coordinates only; polygon rings are kept counterclockwise.
struct InstanceFile {
  InstanceKind kind = InstanceKind::polygons;
  std::vector<Ring> polygons;
  std::vector<Segment> segments;

  bool operator==(const InstanceFile&) const = default;
};

// Parses and validates instance JSON. Checks integer coordinates and ring
// simplicity always; pairwise polygon disjointness is checked for instances
// of up to 64 polygons (quadratic cost), larger ones are trusted.
InstanceFile parse_instance(const std::string& bytes);
std::string emit_instance(const InstanceFile& inst);

// Cover JSON: exact "p/q" coordinates plus lossy decimal annotations, the
// covered input indices per element, and the total area as "p/q". Parsing
// recomputes the area and rejects text whose recorded total disagrees.
Cover parse_cover(const std::string& bytes);
std::string emit_cover(const Cover& cover);

// Deterministic random instance: an n-cell jittered grid, one star-shaped
// polygon with `vertices` vertices strictly inside each cell. Throws
// std::invalid_argument when the parameters cannot be packed.
InstanceFile gen_instance(int n_polygons, int vertices, long bbox, unsigned seed);

}  // namespace convexcover
