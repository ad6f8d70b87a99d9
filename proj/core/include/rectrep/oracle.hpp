#pragma once

// Deliberately unoptimized references used to cross-check the library. None of
// these share code paths with the functions they check.

#include <cstdint>
#include <optional>

#include "rectrep/geometry.hpp"
#include "rectrep/permutation.hpp"
#include "rectrep/sequence_pair.hpp"

namespace rectrep::oracle {

// Direct O(n^5) scan over (i, j, l, m, k).
bool naive_is_plane(const Permutation& perm);

// Breadth-first search per relation over only-relation arcs, with relations
// evaluated straight from coordinates. Throws InvalidInput for an infeasible
// placement.
ForcedRelationMap naive_forced(const Placement& placement);

// Direct O(n^5) scan over element quintuples using order comparisons.
std::optional<BadQuartet> naive_bad_quartet(const SequencePair& sp);

// Deterministic in (n, seed): a random sequence pair, integer sizes in
// [1, 8], left/bottom-justified evaluation with random nonnegative integer
// slack added in front of every rectangle on both axes. Always feasible.
Placement random_feasible_placement(int n, std::uint64_t seed);

}  // namespace rectrep::oracle
