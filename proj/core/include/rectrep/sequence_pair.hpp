#pragma once

// Sequence pairs (pi, rho) and the representation r_{pi,rho}; extraction of
// (restricted) sequence pairs from a placement via the constraint graphs
// G1/G2 and their augmentations; bad quartets.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "rectrep/bit_matrix.hpp"
#include "rectrep/geometry.hpp"
#include "rectrep/permutation.hpp"

namespace rectrep {

// i precedes j in pi iff pi(i) < pi(j); same for rho.
struct SequencePair {
  SequencePair(Permutation pi_order, Permutation rho_order);

  int size() const { return pi.size(); }

  Permutation pi;
  Permutation rho;

  friend bool operator==(const SequencePair&, const SequencePair&) = default;
  friend auto operator<=>(const SequencePair& a, const SequencePair& b) {
    if (auto c = a.pi <=> b.pi; c != 0) return c;
    return a.rho <=> b.rho;
  }
};

//   pi: i < j, rho: j < i  -> west
//   pi: i < j, rho: i < j  -> south
//   pi: j < i, rho: i < j  -> east
//   pi: j < i, rho: j < i  -> north
// Throws InvalidInput when i == j or out of range.
Relation relation_of(const SequencePair& sp, int i, int j);

Representation to_representation(const SequencePair& sp);

enum class GraphLabel { kG1, kG2, kG1Augmented, kG2Augmented };

std::string_view to_string(GraphLabel label);

struct ConstraintGraph {
  GraphLabel label;
  BitMatrix arcs;
};

// Without augmentation: A(G1) = (S \ E) u (W \ N), A(G2) = (S \ W) u (E \ N).
// With augmentation, every (a, b) in N n W such that a is not reachable from b
// in G1 is added to G1 in one batch (likewise N n E against G2). Both graphs
// are checked to be acyclic. Throws InvalidInput for an infeasible placement.
std::pair<ConstraintGraph, ConstraintGraph> build_constraint_graphs(
    const Placement& placement, bool augmented);

// Returns the topological order as a permutation (order(v) = rank of v),
// repeatedly taking the smallest-index source. nullopt if the graph has a
// cycle.
std::optional<Permutation> topological_order(const BitMatrix& graph);

// Same, but picks a uniformly random source at every step.
std::optional<Permutation> random_topological_order(const BitMatrix& graph,
                                                    std::mt19937_64& rng);

// pi and rho are the deterministic topological orders of (G1, G2), or of the
// augmented graphs when `restricted` is set. The result is checked to
// represent the placement and, when restricted, to have no bad quartet.
SequencePair extract_sequence_pair(const Placement& placement, bool restricted);

// Elements a, b, c, d with a < b < c < d in pi, b < a < d < c in rho, and no
// e strictly between b and c in pi and strictly between a and d in rho.
struct BadQuartet {
  int a, b, c, d;
  friend bool operator==(const BadQuartet&, const BadQuartet&) = default;
};

bool is_bad_quartet(const SequencePair& sp, const BadQuartet& q);
// Bad, with b, c adjacent in pi and a, d adjacent in rho.
bool is_extreme(const SequencePair& sp, const BadQuartet& q);

// O(n^4) scan with O(1) window tests from a 2-D prefix count.
std::optional<BadQuartet> find_bad_quartet(const SequencePair& sp);

// O(n^2): only adjacent (b, c) in pi and adjacent (a, d) in rho are tried.
std::optional<BadQuartet> find_extreme_bad_quartet(const SequencePair& sp);

struct ExtremeReduction {
  BadQuartet quartet;
  int steps = 0;
  // d_pi(b, c) + d_rho(a, d) of the input quartet.
  int initial_potential = 0;
};

// Repeatedly replaces one member of the quartet by an element lying inside
// the pi-gap between b and c or the rho-gap between a and d, strictly
// decreasing the potential d_pi(b, c) + d_rho(a, d) until it reaches zero.
// Throws InvalidInput when q is not a bad quartet of sp.
ExtremeReduction reduce_to_extreme(const SequencePair& sp, const BadQuartet& q);

// sigma(t) = rank in rho of the element at rank t in pi, i.e. rho o pi^-1.
// sp has no bad quartet iff sigma is plane.
Permutation relabel_to_plane_test(const SequencePair& sp);

// Inverse of the relabeling: the pair (pi, sigma o pi).
SequencePair from_relabeling(const Permutation& pi, const Permutation& sigma);

}  // namespace rectrep
