#pragma once

// Forcing placements realizing r_pi = r_{id,pi} for biplane pi, and the
// canonical family {r_{pi, rho o pi} : rho biplane}.

#include <utility>
#include <vector>

#include "rectrep/geometry.hpp"
#include "rectrep/permutation.hpp"
#include "rectrep/sequence_pair.hpp"

namespace rectrep {

struct ForcingCertificate {
  Permutation pi;
  Placement placement;
  // The placement passed verify_forcing_for(pi, placement) after construction.
  bool checked = false;
};

// r_{id, pi}: for i < j, south when pi(i) < pi(j), west otherwise.
Representation identity_pair_representation(const Permutation& pi);

// True iff every arc (i, j) of G_pi has only-south and every arc of G_{-pi}
// has only-west in the placement. For a feasible placement this is
// equivalent to "forcing with canonical representation r_{id,pi}".
// Infeasible placements yield false. Throws InvalidInput on a size mismatch.
bool verify_forcing_for(const Permutation& pi, const Placement& placement);

enum class ConstructionChecks {
  // Feasibility and verify_forcing_for after every inductive level and after
  // every in-place adjustment.
  kEveryLevel,
  // Only the final placement.
  kRootOnly,
};

// Inductive construction on the largest element m:
//  - m-1 before m in pi: build for pi without m, then put m on top (full
//    width) when pi(m) is maximal, otherwise to the east of the unique
//    G_{-pi} predecessor j of m, after raising j and, if needed, narrowing j
//    so that it ends left of the minimum G_pi predecessor i of m;
//  - m before m-1: build for -pi and swap the axes.
// Throws InvalidInput if pi is not biplane.
ForcingCertificate construct_forcing_placement(
    const Permutation& pi, ConstructionChecks checks = ConstructionChecks::kEveryLevel);

struct CanonicalFamilyMember {
  Representation representation;  // r_{pi, rho o pi}
  Placement witness;              // forcing, with canonical representation above
};

// Throws InvalidInput if rho is not biplane or sizes differ.
CanonicalFamilyMember canonical_family_member(const Permutation& pi, const Permutation& rho);

// The sequence pairs (pi, rho o pi) for every permutation pi and every
// biplane rho on n elements, ordered by (pi, rho).
std::vector<SequencePair> canonical_family_pairs(int n);

}  // namespace rectrep
