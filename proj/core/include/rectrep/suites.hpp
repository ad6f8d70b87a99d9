#pragma once

// Randomized and exhaustive property suites shared by `rectrep verify` and the
// tests.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace rectrep::suites {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;
  bool passed() const;
  void print(std::ostream& out) const;
};

struct Options {
  int max_n = 8;
  int samples = 1000;
  std::uint64_t seed = 1;
  // Random topological orders drawn per sampled placement.
  int orders_per_sample = 10;
};

// Constraint graph acyclicity, representation by every sampled topological
// order pair, absence of bad quartets in restricted pairs, bad-quartet
// equivalences and the n! * plane(n) count.
Report run_upper(const Options& options);

// Forcing-placement construction for every biplane permutation, cross-checked
// against the brute-force forced relations, and distinctness of the canonical
// family.
Report run_lower(const Options& options);

}  // namespace rectrep::suites
