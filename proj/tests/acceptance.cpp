// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// Expected values come from hand-built fixtures or from the brute-force oracles in
// rectrep/oracle.hpp; library results are checked against both.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "rectrep/evaluate.hpp"
#include "rectrep/forcing.hpp"
#include "rectrep/geometry.hpp"
#include "rectrep/oracle.hpp"
#include "rectrep/permutation.hpp"
#include "rectrep/random.hpp"
#include "rectrep/sequence_pair.hpp"

using namespace rectrep;

namespace {

// Each criterion returns its verdict and appends a one-line summary to
// `detail`; the first failed sub-check is recorded there as well.
struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = "failed: " + what;
    }
  }
};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t oracle_count(int n, bool biplane) {
  std::uint64_t count = 0;
  for (const Permutation& p : all_permutations(n)) {
    if (oracle::naive_is_plane(p) && (!biplane || oracle::naive_is_plane(negate(p)))) ++count;
  }
  return count;
}

std::string describe(const Permutation& p) {
  std::string s;
  for (int v : p.one_based()) s += (s.empty() ? "" : ",") + std::to_string(v);
  return "(" + s + ")";
}

Outcome fixture_reproduction() {
  Outcome o;
  const Placement a = fixtures::two_by_two();
  const Placement c = fixtures::two_by_two_forcing();
  const Representation r = fixtures::two_by_two_r();
  const Representation r2 = fixtures::two_by_two_r_prime();
  o.require(is_feasible(a), "two_by_two feasible");
  o.require(represents(r, a) && fixtures::directly_represents(r, a), "r represents two_by_two");
  o.require(represents(r2, a) && fixtures::directly_represents(r2, a), "r' represents two_by_two");
  o.require(represents(r, c) && fixtures::directly_represents(r, c), "r represents two_by_two_forcing");
  o.require(!represents(r2, c), "r' does not represent two_by_two_forcing");
  std::set<std::pair<int, int>> failing;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && !fixtures::holds(c, i, j, r2.at(i, j))) failing.emplace(std::min(i, j) + 1, std::max(i, j) + 1);
    }
  }
  o.require(failing == std::set<std::pair<int, int>>{{2, 3}}, "r' fails on two_by_two_forcing exactly at (2,3)");
  if (o.passed) o.detail = "r, r' represent two_by_two; on two_by_two_forcing r' fails only at (2,3)";
  return o;
}

Outcome pattern_engine() {
  Outcome o;
  for (int n = 1; n <= 7 && o.passed; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      const bool plane = oracle::naive_is_plane(p);
      const bool biplane = plane && oracle::naive_is_plane(negate(p));
      if (is_plane(p) != plane || is_biplane(p) != biplane) {
        o.require(false, "oracle disagreement at " + describe(p));
        break;
      }
    }
  }
  const std::vector<std::uint64_t> small{1, 2, 6, 23};
  for (int n = 1; n <= 4; ++n) {
    o.require(oracle_count(n, false) == small[static_cast<std::size_t>(n - 1)],
              "oracle plane count n=" + std::to_string(n));
    o.require(count_class(n, PermutationClass::kPlane) == small[static_cast<std::size_t>(n - 1)],
              "plane count n=" + std::to_string(n));
  }
  o.require(oracle_count(4, true) == 22 && count_class(4, PermutationClass::kBiplane) == 22, "biplane(4) = 22");

  std::string plane_counts, biplane_counts;
  for (int n = 1; n <= 9; ++n) {
    const std::uint64_t plane = count_class(n, PermutationClass::kPlane);
    const std::uint64_t biplane = count_class(n, PermutationClass::kBiplane);
    o.require(plane == count_class_pruned(n, PermutationClass::kPlane),
              "pruned plane count n=" + std::to_string(n));
    o.require(biplane == count_class_pruned(n, PermutationClass::kBiplane),
              "pruned biplane count n=" + std::to_string(n));
    o.require(biplane <= plane && plane <= factorial(n), "count ordering n=" + std::to_string(n));
    plane_counts += (n > 1 ? "," : "") + std::to_string(plane);
    biplane_counts += (n > 1 ? "," : "") + std::to_string(biplane);
  }
  if (o.passed) {
    o.detail = "oracle agreement n<=7; plane(1..9)=" + plane_counts + "; biplane(1..9)=" + biplane_counts;
  }
  return o;
}

Outcome upper_bound_machinery() {
  Outcome o;
  constexpr int kPlacements = 10000;
  constexpr int kOrders = 5;
  std::mt19937_64 rng(2024);
  long pairs_checked = 0;
  for (int s = 0; s < kPlacements && o.passed; ++s) {
    const int n = 1 + s % 8;
    const Placement p = oracle::random_feasible_placement(n, static_cast<std::uint64_t>(s));
    const std::string where = "placement seed " + std::to_string(s);
    try {
      const auto [g1, g2] = build_constraint_graphs(p, false);
      const auto [h1, h2] = build_constraint_graphs(p, true);
      o.require(topological_order(g1.arcs) && topological_order(g2.arcs) && topological_order(h1.arcs) &&
                    topological_order(h2.arcs),
                "acyclicity, " + where);
      for (int k = 0; k < kOrders && o.passed; ++k) {
        const SequencePair classic(*random_topological_order(g1.arcs, rng), *random_topological_order(g2.arcs, rng));
        o.require(fixtures::directly_represents(to_representation(classic), p), "G1/G2 pair represents, " + where);
        const SequencePair restricted(*random_topological_order(h1.arcs, rng),
                                      *random_topological_order(h2.arcs, rng));
        o.require(fixtures::directly_represents(to_representation(restricted), p),
                  "G1'/G2' pair represents, " + where);
        o.require(!oracle::naive_bad_quartet(restricted) && !find_bad_quartet(restricted),
                  "G1'/G2' pair has no bad quartet, " + where);
        o.require(oracle::naive_is_plane(relabel_to_plane_test(restricted)), "relabeling is plane, " + where);
        pairs_checked += 2;
      }
    } catch (const std::exception& e) {
      o.require(false, where + ": " + e.what());
    }
  }
  if (o.passed) {
    o.detail = std::to_string(kPlacements) + " placements, " + std::to_string(pairs_checked) + " order pairs";
  }
  return o;
}

Outcome bad_quartet_equivalences() {
  Outcome o;
  std::uint64_t clean4 = 0;
  std::uint64_t clean5 = 0;
  for (int n : {4, 5}) {
    const std::vector<Permutation> perms = all_permutations(n);
    for (const Permutation& pi : perms) {
      for (const Permutation& rho : perms) {
        const SequencePair sp(pi, rho);
        const bool naive = oracle::naive_bad_quartet(sp).has_value();
        const bool fast = find_bad_quartet(sp).has_value();
        const auto extreme = find_extreme_bad_quartet(sp);
        if (fast != naive || extreme.has_value() != naive || (extreme && !is_extreme(sp, *extreme))) {
          o.require(false, "equivalence at pi=" + describe(pi) + " rho=" + describe(rho));
        }
        if (!naive) ++(n == 4 ? clean4 : clean5);
      }
    }
  }
  const std::uint64_t expected5 = factorial(5) * oracle_count(5, false);
  o.require(clean5 == expected5, "n=5 count " + std::to_string(clean5) + " vs " + std::to_string(expected5));
  o.require(clean4 == 552 && clean4 < 576, "n=4 count " + std::to_string(clean4));
  if (o.passed) {
    o.detail = "n=5: " + std::to_string(clean5) + " = 5!*plane(5) of 14400; n=4: " + std::to_string(clean4) +
               " < 576";
  }
  return o;
}

Outcome lower_bound_construction() {
  Outcome o;
  std::uint64_t built = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& pi : enumerate_biplane(n)) {
      try {
        const ForcingCertificate cert = construct_forcing_placement(pi);
        const ForcedRelationMap forced = oracle::naive_forced(cert.placement);
        bool matches = forced.total();
        for (int i = 0; i < n && matches; ++i) {
          for (int j = i + 1; j < n; ++j) {
            const Relation expected = pi(i) < pi(j) ? Relation::kSouth : Relation::kWest;
            if (forced.at(i, j) != expected) matches = false;
          }
        }
        o.require(is_feasible(cert.placement) && verify_forcing_for(pi, cert.placement) && matches,
                  "forcing placement for " + describe(pi));
        ++built;
      } catch (const std::exception& e) {
        o.require(false, describe(pi) + ": " + e.what());
      }
    }
  }
  o.require(built == oracle_count(1, true) + oracle_count(2, true) + oracle_count(3, true) +
                         oracle_count(4, true) + oracle_count(5, true) + oracle_count(6, true),
            "every biplane permutation up to n=6 constructed");

  const std::vector<SequencePair> family = canonical_family_pairs(4);
  std::set<std::vector<Relation>> distinct;
  for (const SequencePair& sp : family) {
    const Representation r = to_representation(sp);
    std::vector<Relation> key;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) key.push_back(r.at(i, j));
    }
    distinct.insert(key);
  }
  const std::uint64_t expected = factorial(4) * oracle_count(4, true);
  o.require(family.size() == 528 && expected == 528 && distinct.size() == 528,
            "family size " + std::to_string(distinct.size()) + " distinct of " + std::to_string(family.size()));
  const std::vector<Permutation> biplane4 = enumerate_biplane(4);
  for (const Permutation& pi : all_permutations(4)) {
    for (const Permutation& rho : biplane4) {
      const CanonicalFamilyMember m = canonical_family_member(pi, rho);
      o.require(oracle::naive_forced(m.witness).total() && fixtures::directly_represents(m.representation, m.witness),
                "family witness " + describe(pi) + " " + describe(rho));
    }
  }
  if (o.passed) {
    o.detail = std::to_string(built) + " placements verified twice; family n=4 has " +
               std::to_string(distinct.size()) + " distinct witnessed members";
  }
  return o;
}

Outcome non_tightness() {
  Outcome o;
  const Placement p = fixtures::five_gap();
  o.require(is_feasible(p), "five_gap feasible");
  o.require(!is_forcing(p), "five_gap not forcing");
  const ForcedRelationMap fast = forced_relations(p);
  const ForcedRelationMap naive = oracle::naive_forced(p);
  o.require(fast == naive, "forced relations agree with BFS");
  std::set<std::pair<int, int>> missing;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (!naive.at(i, j)) missing.emplace(i + 1, j + 1);
    }
  }
  o.require(missing == std::set<std::pair<int, int>>{{1, 5}}, "(1,5) is the unique unforced pair");
  for (int i = 1; i <= 3; ++i) {
    for (Relation r : kAllRelations) {
      o.require(!(fixtures::holds(p, 0, i, r) && fixtures::holds(p, i, 4, r)),
                "(1," + std::to_string(i + 1) + ") and (" + std::to_string(i + 1) + ",5) share " +
                    std::string(to_string(r)));
    }
  }
  if (o.passed) o.detail = "feasible, unforced pair {(1,5)} only, no shared relation through 2, 3, 4";
  return o;
}

Outcome optimizer_completeness() {
  Outcome o;
  constexpr int kInstances = 200;
  std::uint64_t evaluated = 0;
  for (int s = 0; s < kInstances; ++s) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(s) * 7919 + 1);
    const int n = 1 + s % 4;
    std::vector<Rational> w, h;
    for (int i = 0; i < n; ++i) {
      w.push_back(Rational(draw_between(rng, 1, 8)) / draw_between(rng, 1, 2));
      h.push_back(Rational(draw_between(rng, 1, 8)) / draw_between(rng, 1, 2));
    }
    Netlist nets;
    if (n >= 2) {
      const int count = draw_between(rng, 1, 3);
      for (int k = 0; k < count; ++k) {
        std::vector<int> members{0};
        for (int i = 1; i < n; ++i) members.push_back(i);
        shuffle(members, rng);
        members.resize(static_cast<std::size_t>(draw_between(rng, 2, n)));
        nets.nets.push_back(members);
      }
    }
    const Dimensions dims(w, h);
    for (Objective objective : {Objective::kArea, Objective::kHpwl}) {
      const OptimumResult full = exhaustive_optimum(dims, nets, objective, false);
      const OptimumResult restricted = exhaustive_optimum(dims, nets, objective, true);
      evaluated += full.evaluated + restricted.evaluated;
      o.require(full.value == restricted.value,
                "instance " + std::to_string(s) + (objective == Objective::kArea ? " area" : " hpwl"));
    }
  }
  if (o.passed) {
    o.detail = std::to_string(kInstances) + " instances x 2 objectives, " + std::to_string(evaluated) +
               " compactions";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  // seven_chain as inline JSON.
  const std::string placement = R"('{"n":7,"rects":[)"
      R"({"id":1,"xmin":1,"ymin":1,"xmax":4,"ymax":2},{"id":2,"xmin":1,"ymin":2,"xmax":2,"ymax":6},)"
      R"({"id":3,"xmin":4,"ymin":1,"xmax":5,"ymax":3},{"id":4,"xmin":2,"ymin":3,"xmax":5,"ymax":4},)"
      R"({"id":5,"xmin":2,"ymin":4,"xmax":3,"ymax":6},{"id":6,"xmin":5,"ymin":1,"xmax":6,"ymax":5},)"
      R"({"id":7,"xmin":3,"ymin":5,"xmax":6,"ymax":6}]}')";
  const std::vector<std::string> commands{
      "check-perm '[2,5,7,6,1,3,8,4]'",
      "check-perm '[2,5,7,6,1,3,8,4]' --biplane",
      "enum plane --n 6",
      "enum biplane --n 6 --pruned",
      "enum plane --n 8 --count-only",
      "enum biplane --n 8 --count-only --pruned",
      "extract " + placement,
      "extract " + placement + " --classic --dump-graphs",
      R"(badquartet '{"pi":[1,2,3,4,5],"rho":[3,1,2,5,4]}')",
      R"(badquartet '{"pi":[1,2,3,4,5],"rho":[3,1,2,5,4]}' --extreme)",
      "construct '[7,1,2,3,4,8,6,5]'",
      "construct '[2,5,7,6,1,3,8,4]'",
      "construct '[3,1,4,2]'",
      "verify --suite all --n 6 --samples 300 --seed 17",
      R"(compact '{"pi":[3,1,2,4],"rho":[2,4,1,3]}' '{"widths":[1,"3/2",2,1],"heights":[2,1,1,"1/2"]}')",
      R"(solve '{"widths":[1,2,3,1],"heights":[3,1,2,2]}' --objective area)",
      R"(solve '{"widths":[1,2,3,1],"heights":[3,1,2,2]}' '{"nets":[[1,4],[2,3,4]]}' --objective hpwl --full)",
      "render " + placement + " -o -",
      "render '[2,5,7,6,1,3,8,4]' -o -",
  };
  for (const std::string& args : commands) {
    const cli_runner::Result a = cli_runner::run(args);
    const cli_runner::Result b = cli_runner::run(args);
    // The natural-embedding example is plane but not biplane.
    const int expected_exit = args == "construct '[2,5,7,6,1,3,8,4]'" ? 3 : 0;
    o.require(a.exit_code == expected_exit, "exit status of `" + args + "` is " + std::to_string(a.exit_code));
    o.require(a.exit_code == b.exit_code && a.out == b.out && a.err == b.err, "byte-identical `" + args + "`");
  }
  if (o.passed) o.detail = std::to_string(commands.size()) + " commands run twice, stdout and stderr identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;  // 0: no time limit
  };
  const std::vector<Criterion> criteria{
      {"fixture reproduction", fixture_reproduction, 1},
      {"pattern engine", pattern_engine, 600},
      {"upper-bound machinery", upper_bound_machinery, 300},
      {"bad-quartet equivalences", bad_quartet_equivalences, 60},
      {"lower-bound construction", lower_bound_construction, 600},
      {"non-tightness facts", non_tightness, 1},
      {"optimizer completeness", optimizer_completeness, 600},
      {"determinism", determinism, 0},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double budget = criteria[k].budget_seconds;
    if (outcome.passed && budget > 0 && seconds > budget) {
      outcome.passed = false;
      outcome.detail += "; over the time budget of " + std::to_string(static_cast<int>(budget)) + "s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  criterion " << k + 1 << " " << criteria[k].name
              << ": " << outcome.detail << " [" << timing << "]" << std::endl;
    if (!outcome.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
