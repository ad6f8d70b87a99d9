#pragma once

// Permutations of {0, ..., n-1}, the digraph G_pi, and the barred patterns
// 21-3bar-54 (plane) and 45-3bar-12 (its value reflection).

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rectrep/bit_matrix.hpp"

namespace rectrep {

// A bijection on {0, ..., n-1}, n >= 1. perm(i) is the image of i; element i
// precedes element j in the order of the permutation iff perm(i) < perm(j).
class Permutation {
 public:
  // Throws InvalidInput unless `image` is a bijection on {0, ..., n-1}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  // From 1-based images, e.g. {2, 5, 7, 6, 1, 3, 8, 4}.
  static Permutation from_one_based(std::span<const int> image);
  static Permutation from_one_based(std::initializer_list<int> image);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }
  std::vector<int> one_based() const;

  // True iff i comes before j in this order (perm(i) < perm(j)).
  bool before(int i, int j) const { return (*this)(i) < (*this)(j); }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on the image.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<int> image_;
};

// (-perm)(i) = n - 1 - perm(i) (value complement).
Permutation negate(const Permutation& perm);

// (outer o inner)(i) = outer(inner(i)). Throws InvalidInput on a size mismatch.
Permutation compose(const Permutation& outer, const Permutation& inner);

// Arcs (i, j): i < j, perm(i) < perm(j), and no k with i < k < j and
// perm(i) < perm(k) < perm(j).
struct PermDigraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // sorted

  bool has_arc(int from, int to) const;
  std::vector<int> predecessors(int v) const;  // ascending
  BitMatrix adjacency() const;
};

PermDigraph perm_digraph(const Permutation& perm);

// Closed form of reachability in G_perm: i <= j and perm(i) <= perm(j).
// Throws InvalidInput when an index is out of range.
bool reachable(const Permutation& perm, int i, int j);

// Positions (i, j, l, m), i < j < l < m, with perm(j) < perm(i) < perm(m) <
// perm(l) and no k with j < k < l and perm(i) < perm(k) < perm(m).
std::optional<std::array<int, 4>> find_plane_pattern(const Permutation& perm);

bool is_plane(const Permutation& perm);
bool is_biplane(const Permutation& perm);

enum class PermutationClass { kPlane, kBiplane };

// Calls visit(perm) for every member of the class on n elements, in
// lexicographic order of the image.
void for_each_in_class(int n, PermutationClass cls,
                       const std::function<void(const Permutation&)>& visit);

// Filters all n! permutations (lexicographic order).
std::vector<Permutation> enumerate_plane(int n);
std::vector<Permutation> enumerate_biplane(int n);

// Backtracking generator that abandons a prefix as soon as it contains a
// forbidden pattern; all positions of such a pattern's window lie inside the
// prefix, so the pattern can never disappear. Same output as the filter.
std::vector<Permutation> enumerate_pruned(int n, PermutationClass cls);

// Member counts; parallel over the first image value.
std::uint64_t count_class(int n, PermutationClass cls);
std::uint64_t count_class_pruned(int n, PermutationClass cls);

// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace rectrep
