#include "rectrep/sequence_pair.hpp"

#include <string>
#include <vector>

#include "rectrep/error.hpp"
#include "rectrep/random.hpp"

namespace rectrep {
namespace {

Relation relation_unchecked(const SequencePair& sp, int i, int j) {
  const bool pi_before = sp.pi.before(i, j);
  const bool rho_before = sp.rho.before(i, j);
  if (pi_before) return rho_before ? Relation::kSouth : Relation::kWest;
  return rho_before ? Relation::kEast : Relation::kNorth;
}

// Kahn's algorithm; `pick` chooses among the current sources (ascending).
template <typename Pick>
std::optional<Permutation> topological_order_with(const BitMatrix& graph, Pick&& pick) {
  const int n = graph.size();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (graph.test(a, b)) ++indegree[static_cast<std::size_t>(b)];
    }
  }
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  std::vector<int> sources;
  for (int step = 0; step < n; ++step) {
    sources.clear();
    for (int v = 0; v < n; ++v) {
      if (!done[static_cast<std::size_t>(v)] && indegree[static_cast<std::size_t>(v)] == 0) {
        sources.push_back(v);
      }
    }
    if (sources.empty()) return std::nullopt;
    const int v = pick(sources);
    done[static_cast<std::size_t>(v)] = true;
    rank[static_cast<std::size_t>(v)] = step;
    for (int b = 0; b < n; ++b) {
      if (graph.test(v, b)) --indegree[static_cast<std::size_t>(b)];
    }
  }
  return Permutation(std::move(rank));
}

void check_pair(const SequencePair& sp, int i, int j) {
  const int n = sp.size();
  if (i < 0 || i >= n || j < 0 || j >= n) throw InvalidInput("element index out of range");
  if (i == j) throw InvalidInput("relation_of needs two distinct elements");
}

int potential(const SequencePair& sp, const BadQuartet& q) {
  return (sp.pi(q.c) - sp.pi(q.b) - 1) + (sp.rho(q.d) - sp.rho(q.a) - 1);
}

}  // namespace

SequencePair::SequencePair(Permutation pi_order, Permutation rho_order)
    : pi(std::move(pi_order)), rho(std::move(rho_order)) {
  if (pi.size() != rho.size()) throw InvalidInput("sequence pair permutations differ in size");
}

Relation relation_of(const SequencePair& sp, int i, int j) {
  check_pair(sp, i, j);
  return relation_unchecked(sp, i, j);
}

Representation to_representation(const SequencePair& sp) {
  return Representation::from_upper_triangle(
      sp.size(), [&](int i, int j) { return relation_unchecked(sp, i, j); });
}

std::string_view to_string(GraphLabel label) {
  switch (label) {
    case GraphLabel::kG1: return "G1";
    case GraphLabel::kG2: return "G2";
    case GraphLabel::kG1Augmented: return "G1'";
    case GraphLabel::kG2Augmented: return "G2'";
  }
  return "?";
}

std::pair<ConstraintGraph, ConstraintGraph> build_constraint_graphs(const Placement& placement,
                                                                    bool augmented) {
  const int n = placement.size();
  const RelationTable table(placement);
  if (!table.feasible()) throw InvalidInput("constraint graphs need a feasible placement");

  BitMatrix g1(n);
  BitMatrix g2(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const RelationMask m = table.at(a, b);
      const bool s = m.contains(Relation::kSouth);
      const bool w = m.contains(Relation::kWest);
      const bool e = m.contains(Relation::kEast);
      const bool no = m.contains(Relation::kNorth);
      if ((s && !e) || (w && !no)) g1.set(a, b);
      if ((s && !w) || (e && !no)) g2.set(a, b);
    }
  }

  if (augmented) {
    // One batch against the reachability of the unaugmented graphs.
    const BitMatrix reach1 = g1.transitive_closure();
    const BitMatrix reach2 = g2.transitive_closure();
    BitMatrix extra1(n);
    BitMatrix extra2(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const RelationMask m = table.at(a, b);
        if (!m.contains(Relation::kNorth)) continue;
        if (m.contains(Relation::kWest) && !reach1.test(b, a)) extra1.set(a, b);
        if (m.contains(Relation::kEast) && !reach2.test(b, a)) extra2.set(a, b);
      }
    }
    g1 |= extra1;
    g2 |= extra2;
  }

  ConstraintGraph first{augmented ? GraphLabel::kG1Augmented : GraphLabel::kG1, std::move(g1)};
  ConstraintGraph second{augmented ? GraphLabel::kG2Augmented : GraphLabel::kG2, std::move(g2)};
  check_invariant(topological_order(first.arcs).has_value(),
                  std::string(to_string(first.label)) + " has a cycle");
  check_invariant(topological_order(second.arcs).has_value(),
                  std::string(to_string(second.label)) + " has a cycle");
  return {std::move(first), std::move(second)};
}

std::optional<Permutation> topological_order(const BitMatrix& graph) {
  return topological_order_with(graph, [](const std::vector<int>& sources) {
    return sources.front();
  });
}

std::optional<Permutation> random_topological_order(const BitMatrix& graph,
                                                    std::mt19937_64& rng) {
  return topological_order_with(graph, [&rng](const std::vector<int>& sources) {
    return sources[draw_below(rng, sources.size())];
  });
}

SequencePair extract_sequence_pair(const Placement& placement, bool restricted) {
  const auto [g1, g2] = build_constraint_graphs(placement, restricted);
  SequencePair sp(*topological_order(g1.arcs), *topological_order(g2.arcs));
  check_invariant(represents(to_representation(sp), placement),
                  "extracted sequence pair does not represent the placement");
  if (restricted) {
    check_invariant(!find_bad_quartet(sp).has_value(),
                    "restricted sequence pair has a bad quartet");
  }
  return sp;
}

bool is_bad_quartet(const SequencePair& sp, const BadQuartet& q) {
  const int n = sp.size();
  for (int v : {q.a, q.b, q.c, q.d}) {
    if (v < 0 || v >= n) return false;
  }
  const auto& pi = sp.pi;
  const auto& rho = sp.rho;
  if (!(pi.before(q.a, q.b) && pi.before(q.b, q.c) && pi.before(q.c, q.d))) return false;
  if (!(rho.before(q.b, q.a) && rho.before(q.a, q.d) && rho.before(q.d, q.c))) return false;
  for (int e = 0; e < n; ++e) {
    if (pi.before(q.b, e) && pi.before(e, q.c) && rho.before(q.a, e) && rho.before(e, q.d)) {
      return false;
    }
  }
  return true;
}

bool is_extreme(const SequencePair& sp, const BadQuartet& q) {
  return is_bad_quartet(sp, q) && sp.pi(q.c) == sp.pi(q.b) + 1 &&
         sp.rho(q.d) == sp.rho(q.a) + 1;
}

std::optional<BadQuartet> find_bad_quartet(const SequencePair& sp) {
  // In pi-rank coordinates a bad quartet is exactly a 21-3bar-54 occurrence
  // of rho o pi^-1, whose window test runs on a prefix-count table.
  const auto found = find_plane_pattern(relabel_to_plane_test(sp));
  if (!found) return std::nullopt;
  const Permutation pi_inv = sp.pi.inverse();
  const auto [i, j, l, m] = *found;
  return BadQuartet{pi_inv(i), pi_inv(j), pi_inv(l), pi_inv(m)};
}

std::optional<BadQuartet> find_extreme_bad_quartet(const SequencePair& sp) {
  const int n = sp.size();
  const Permutation pi_inv = sp.pi.inverse();
  const Permutation rho_inv = sp.rho.inverse();
  for (int t = 0; t + 1 < n; ++t) {
    const int b = pi_inv(t);
    const int c = pi_inv(t + 1);
    for (int r = 0; r + 1 < n; ++r) {
      const int a = rho_inv(r);
      const int d = rho_inv(r + 1);
      if (sp.pi(a) < t && sp.pi(d) > t + 1 && sp.rho(b) < r && sp.rho(c) > r + 1) {
        return BadQuartet{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

ExtremeReduction reduce_to_extreme(const SequencePair& sp, const BadQuartet& q) {
  if (!is_bad_quartet(sp, q)) throw InvalidInput("not a bad quartet of this sequence pair");
  const Permutation pi_inv = sp.pi.inverse();
  const Permutation rho_inv = sp.rho.inverse();

  ExtremeReduction result{q, 0, potential(sp, q)};
  BadQuartet& cur = result.quartet;
  int phi = result.initial_potential;
  while (phi > 0) {
    BadQuartet next = cur;
    if (sp.pi(cur.c) - sp.pi(cur.b) > 1) {
      const int e = pi_inv(sp.pi(cur.b) + 1);
      if (sp.rho.before(e, cur.a)) {
        next.b = e;
      } else {
        next.c = e;
      }
    } else {
      const int e = rho_inv(sp.rho(cur.a) + 1);
      if (sp.pi.before(cur.c, e)) {
        next.d = e;
      } else {
        next.a = e;
      }
    }
    const int next_phi = potential(sp, next);
    check_invariant(is_bad_quartet(sp, next), "reduction step left the set of bad quartets");
    check_invariant(next_phi < phi, "reduction step did not decrease the potential");
    cur = next;
    phi = next_phi;
    ++result.steps;
  }
  return result;
}

Permutation relabel_to_plane_test(const SequencePair& sp) {
  return compose(sp.rho, sp.pi.inverse());
}

SequencePair from_relabeling(const Permutation& pi, const Permutation& sigma) {
  return SequencePair(pi, compose(sigma, pi));
}

}  // namespace rectrep
