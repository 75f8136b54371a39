#pragma once

#include <cstdint>
#include <vector>

#include "convexcover/convexify.hpp"

namespace convexcover {

struct ValidationReport {
  bool disjoint = false;           // elements pairwise disjoint as closed sets
  bool partitioned = false;        // covered ids partition the input ids
  bool hull_of_group = false;      // each element equals the hull of its inputs
  int tight_sampling_failures = 0; // sampled interior lines missing every covered input
  Rational area;

  bool ok() const {
    return disjoint && partitioned && hull_of_group && tight_sampling_failures == 0;
  }
};

// Reference cover: replaces a seeded-random intersecting pair of hulls by the
// hull of their union until all are pairwise disjoint. Intersection is tested
// by brute force over vertices and edge pairs. Rings may be simple polygons
// or degenerate rings of 1-2 points.
Cover brute_convexify(const std::vector<Ring>& rings, std::uint64_t seed);

// Checks a cover against the inputs it claims to cover. Tightness is sampled
// with 100 random interior lines per non-degenerate element.
ValidationReport validate_cover(const std::vector<Ring>& inputs, const Cover& cover,
                                std::uint64_t seed = 0);

// Equality up to element order and ring rotation.
bool canonical_equal(const Cover& a, const Cover& b);

}  // namespace convexcover
