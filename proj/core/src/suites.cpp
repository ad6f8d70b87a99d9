#include "rectrep/suites.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <set>
#include <string>

#include "rectrep/error.hpp"
#include "rectrep/forcing.hpp"
#include "rectrep/geometry.hpp"
#include "rectrep/oracle.hpp"
#include "rectrep/permutation.hpp"
#include "rectrep/random.hpp"
#include "rectrep/sequence_pair.hpp"

namespace rectrep::suites {
namespace {

// Tallies one named property over many cases, keeping the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::string& context) {
    ++cases_;
    if (!ok && first_failure_.empty()) first_failure_ = context;
    if (!ok) ++failures_;
  }

  template <typename F>
  void check(const std::string& context, F&& body) {
    try {
      record(body(), context);
    } catch (const std::exception& e) {
      record(false, context + ": " + e.what());
    }
  }

  CheckResult result() const {
    std::string detail = std::to_string(cases_) + " cases";
    if (failures_ > 0) {
      detail += ", " + std::to_string(failures_) + " failed; first: " + first_failure_;
    }
    return CheckResult{name_, failures_ == 0 && cases_ > 0, detail};
  }

 private:
  std::string name_;
  long cases_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

std::string describe(const Permutation& p) {
  std::string s = "[";
  for (int v : p.one_based()) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + "]";
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void Report::print(std::ostream& out) const {
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
  }
  out << (passed() ? "all checks passed" : "some checks FAILED") << "\n";
}

Report run_upper(const Options& options) {
  Report report;
  std::mt19937_64 rng(options.seed);

  Tally acyclic("constraint graphs G1, G2, G1', G2' are acyclic");
  Tally consistent("every sampled topological order pair of G1/G2 represents the placement");
  Tally restricted("sampled G1'/G2' order pairs represent the placement and have no bad quartet");
  Tally relabeled("restricted pairs relabel to plane permutations");
  Tally extracted("deterministic extraction (classic and restricted) represents the placement");
  Tally forced("forced relations agree with breadth-first search");

  for (int s = 0; s < options.samples; ++s) {
    const int n = draw_between(rng, 1, std::max(1, options.max_n));
    const std::uint64_t seed = rng();
    const Placement placement = oracle::random_feasible_placement(n, seed);
    const RelationTable table(placement);
    const std::string context = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);

    acyclic.check(context, [&] {
      for (bool augmented : {false, true}) {
        const auto [g1, g2] = build_constraint_graphs(placement, augmented);
        if (!topological_order(g1.arcs) || !topological_order(g2.arcs)) return false;
      }
      return true;
    });

    const auto [g1, g2] = build_constraint_graphs(placement, false);
    const auto [g1a, g2a] = build_constraint_graphs(placement, true);
    for (int k = 0; k < options.orders_per_sample; ++k) {
      consistent.check(context, [&] {
        const SequencePair sp(*random_topological_order(g1.arcs, rng),
                              *random_topological_order(g2.arcs, rng));
        return represents(to_representation(sp), table);
      });
      std::optional<SequencePair> sp;
      restricted.check(context, [&] {
        sp.emplace(*random_topological_order(g1a.arcs, rng), *random_topological_order(g2a.arcs, rng));
        return represents(to_representation(*sp), table) && !find_bad_quartet(*sp).has_value();
      });
      if (sp) relabeled.check(context, [&] { return is_plane(relabel_to_plane_test(*sp)); });
    }

    extracted.check(context, [&] {
      return represents(to_representation(extract_sequence_pair(placement, false)), table) &&
             represents(to_representation(extract_sequence_pair(placement, true)), table);
    });
    forced.check(context, [&] { return forced_relations(placement) == oracle::naive_forced(placement); });
  }
  for (const Tally* t : {&acyclic, &consistent, &restricted, &relabeled, &extracted, &forced}) {
    report.checks.push_back(t->result());
  }

  const int exhaustive_n = std::min(options.max_n, 5);
  for (int n = 1; n <= exhaustive_n; ++n) {
    const std::vector<Permutation> perms = all_permutations(n);
    Tally fast_vs_naive("n=" + std::to_string(n) + ": bad-quartet search agrees with brute force");
    Tally extreme("n=" + std::to_string(n) + ": bad quartet exists iff an extreme one exists");
    Tally reduction("n=" + std::to_string(n) + ": potential descent ends in an extreme quartet");
    Tally relabel("n=" + std::to_string(n) + ": no bad quartet iff relabeling is plane");
    std::uint64_t without_bad = 0;
    for (const Permutation& pi : perms) {
      for (const Permutation& rho : perms) {
        const SequencePair sp(pi, rho);
        const std::string context = "pi=" + describe(pi) + " rho=" + describe(rho);
        const auto found = find_bad_quartet(sp);
        if (!found) ++without_bad;
        fast_vs_naive.check(context, [&] {
          return found.has_value() == oracle::naive_bad_quartet(sp).has_value() &&
                 (!found || is_bad_quartet(sp, *found));
        });
        extreme.check(context, [&] {
          const auto ext = find_extreme_bad_quartet(sp);
          return found.has_value() == ext.has_value() && (!ext || is_extreme(sp, *ext));
        });
        if (found) {
          reduction.check(context, [&] {
            const ExtremeReduction r = reduce_to_extreme(sp, *found);
            return is_extreme(sp, r.quartet) && r.steps <= r.initial_potential;
          });
        }
        relabel.check(context, [&] { return found.has_value() != is_plane(relabel_to_plane_test(sp)); });
      }
    }
    report.checks.push_back(fast_vs_naive.result());
    report.checks.push_back(extreme.result());
    if (n >= 4) report.checks.push_back(reduction.result());
    report.checks.push_back(relabel.result());

    const std::uint64_t expected = factorial(n) * count_class(n, PermutationClass::kPlane);
    report.checks.push_back(CheckResult{
        "n=" + std::to_string(n) + ": pairs without bad quartet = n! * plane(n)",
        without_bad == expected,
        std::to_string(without_bad) + " vs " + std::to_string(expected) + " of " +
            std::to_string(factorial(n) * factorial(n))});
  }
  return report;
}

Report run_lower(const Options& options) {
  Report report;
  const int max_construct = std::min(options.max_n, 7);
  for (int n = 1; n <= max_construct; ++n) {
    Tally built("n=" + std::to_string(n) +
                ": forcing placement for every biplane permutation, checked by brute force");
    for (const Permutation& pi : enumerate_biplane(n)) {
      built.check("pi=" + describe(pi), [&] {
        const ForcingCertificate cert = construct_forcing_placement(pi);
        const ForcedRelationMap naive = oracle::naive_forced(cert.placement);
        if (!cert.checked || !verify_forcing_for(pi, cert.placement) || !naive.total()) return false;
        const Representation expected = identity_pair_representation(pi);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (i != j && naive.at(i, j) != expected.at(i, j)) return false;
          }
        }
        for (const Rect& r : cert.placement.rects()) {
          for (const Rational* v : {&r.xmin, &r.ymin, &r.xmax, &r.ymax}) {
            if (!is_dyadic(*v)) return false;
          }
        }
        return true;
      });
    }
    report.checks.push_back(built.result());
  }

  const int max_family = std::min(options.max_n, 4);
  std::mt19937_64 rng(options.seed);
  for (int n = 1; n <= max_family; ++n) {
    const std::vector<SequencePair> pairs = canonical_family_pairs(n);
    std::set<std::vector<int>> distinct;
    for (const SequencePair& sp : pairs) {
      const Representation r = to_representation(sp);
      std::vector<int> key;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) key.push_back(static_cast<int>(r.at(i, j)));
      }
      distinct.insert(std::move(key));
    }
    const std::uint64_t expected = factorial(n) * count_class(n, PermutationClass::kBiplane);
    report.checks.push_back(CheckResult{
        "n=" + std::to_string(n) + ": canonical family has n! * biplane(n) distinct members",
        distinct.size() == pairs.size() && pairs.size() == expected,
        std::to_string(distinct.size()) + " distinct of " + std::to_string(pairs.size()) +
            ", expected " + std::to_string(expected)});

    Tally witnessed("n=" + std::to_string(n) + ": sampled family members have forcing witnesses");
    const std::vector<Permutation> perms = all_permutations(n);
    const std::vector<Permutation> biplane = enumerate_biplane(n);
    const int draws = std::max(1, std::min<int>(options.samples, static_cast<int>(pairs.size())));
    for (int k = 0; k < draws; ++k) {
      const Permutation& pi = perms[draw_below(rng, perms.size())];
      const Permutation& rho = biplane[draw_below(rng, biplane.size())];
      witnessed.check("pi=" + describe(pi) + " rho=" + describe(rho), [&] {
        const CanonicalFamilyMember member = canonical_family_member(pi, rho);
        return is_forcing(member.witness) &&
               canonical_representation(member.witness) == member.representation;
      });
    }
    report.checks.push_back(witnessed.result());
  }
  return report;
}

}  // namespace rectrep::suites
