#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rectrep/geometry.hpp"
#include "rectrep/rational.hpp"
#include "rectrep/sequence_pair.hpp"

namespace rectrep {

// Rectangle sizes, all strictly positive.
struct Dimensions {
  // Throws InvalidInput on differing lengths, an empty list or a
  // non-positive entry.
  Dimensions(std::vector<Rational> widths, std::vector<Rational> heights);

  static Dimensions of(const Placement& placement);

  int size() const { return static_cast<int>(widths.size()); }

  std::vector<Rational> widths;
  std::vector<Rational> heights;
};

// Nets over rectangle indices, each with at least two distinct members.
struct Netlist {
  std::vector<std::vector<int>> nets;
};

// Throws InvalidInput when an index is outside [0, n) or a net is too small.
void validate(const Netlist& netlist, int n);

// Left/bottom-justified evaluation: xmin(i) is the longest path into i in the
// west digraph of the pair weighted by widths, ymin(i) likewise over south.
// Throws InvalidInput on a size mismatch.
Placement compact(const SequencePair& sp, const Dimensions& dims);

struct BoxSize {
  Rational width;
  Rational height;
  friend bool operator==(const BoxSize&, const BoxSize&) = default;
};

BoxSize bounding_box(const Placement& placement);

// Sum over nets of the x-spread plus the y-spread of member centers.
Rational hpwl(const Placement& placement, const Netlist& netlist);

enum class Objective { kArea, kHpwl };

struct OptimumResult {
  Rational value;
  SequencePair best;
  std::uint64_t evaluated = 0;
};

inline constexpr int kDefaultExhaustiveLimit = 6;

// Minimum of the objective over compact(sp, dims) for every sequence pair
// (restricted = false) or every pair without a bad quartet (restricted =
// true, generated as pi x plane sigma). Ties go to the lexicographically
// smallest (pi, rho). Throws InvalidInput when n exceeds `limit`.
OptimumResult exhaustive_optimum(const Dimensions& dims, const Netlist& netlist,
                                 Objective objective, bool restricted,
                                 int limit = kDefaultExhaustiveLimit);

}  // namespace rectrep
