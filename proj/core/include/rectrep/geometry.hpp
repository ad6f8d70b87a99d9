#pragma once

// Placement model: axis-aligned closed boxes with exact coordinates, the four
// spatial relations between them, forced relations and canonical
// representations.
//
// Rectangles are indexed 0..n-1 throughout the library; serialized formats
// use 1-based ids.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rectrep/bit_matrix.hpp"
#include "rectrep/rational.hpp"

namespace rectrep {

class Permutation;

enum class Relation : std::uint8_t { kWest = 0, kSouth = 1, kEast = 2, kNorth = 3 };

inline constexpr std::array<Relation, 4> kAllRelations = {
    Relation::kWest, Relation::kSouth, Relation::kEast, Relation::kNorth};

constexpr Relation flip(Relation r) {
  return static_cast<Relation>((static_cast<int>(r) + 2) % 4);
}

std::string_view to_string(Relation r);
// Throws ParseError on an unknown name.
Relation relation_from_string(std::string_view name);

// Subset of {west, south, east, north}.
class RelationMask {
 public:
  constexpr RelationMask() = default;
  constexpr RelationMask(std::initializer_list<Relation> relations) {
    for (Relation r : relations) insert(r);
  }

  constexpr void insert(Relation r) { bits_ |= bit(r); }
  constexpr bool contains(Relation r) const { return (bits_ & bit(r)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  // The single member when size() == 1.
  std::optional<Relation> only() const;
  RelationMask flipped() const;

  friend constexpr bool operator==(RelationMask, RelationMask) = default;

 private:
  static constexpr std::uint8_t bit(Relation r) {
    return static_cast<std::uint8_t>(1U << static_cast<unsigned>(r));
  }
  std::uint8_t bits_ = 0;
};

struct Rect {
  Rational xmin, ymin, xmax, ymax;
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Immutable sequence of n >= 1 rectangles with xmin < xmax and ymin < ymax.
class Placement {
 public:
  // Throws InvalidInput when empty or when some rectangle is degenerate.
  explicit Placement(std::vector<Rect> rects);

  int size() const { return static_cast<int>(rects_.size()); }
  const Rect& rect(int i) const { return rects_.at(static_cast<std::size_t>(i)); }
  std::span<const Rect> rects() const { return rects_; }

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::vector<Rect> rects_;
};

// The relations of every ordered pair, computed once. Diagonal entries are
// empty.
class RelationTable {
 public:
  explicit RelationTable(const Placement& placement);

  int size() const { return n_; }
  RelationMask at(int i, int j) const {
    return masks_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
  }
  bool feasible() const;

 private:
  int n_;
  std::vector<RelationMask> masks_;
};

// (a, b) is in `north` iff ymax(b) <= ymin(a), and so on for the other three.
struct RelationSets {
  BitMatrix north, south, east, west;

  const BitMatrix& of(Relation r) const;
};

// Total map from ordered pairs (i, j), i != j, to a relation.
class Representation {
 public:
  // Fills the upper triangle from relation(i, j), i < j, and the lower
  // triangle by flip, so the result is flip-consistent by construction.
  template <typename F>
  static Representation from_upper_triangle(int n, F&& relation) {
    Representation r(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Relation rel = relation(i, j);
        r.at_mut(i, j) = rel;
        r.at_mut(j, i) = flip(rel);
      }
    }
    return r;
  }

  // Any table of n*n entries (row-major, diagonal ignored). Not required to be
  // flip-consistent.
  static Representation from_table(int n, std::vector<Relation> table);

  int size() const { return n_; }
  Relation at(int i, int j) const;
  bool flip_consistent() const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  explicit Representation(int n);
  Relation& at_mut(int i, int j) {
    return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
  }

  int n_;
  std::vector<Relation> table_;
};

// Partial map from ordered pairs to their forced relation.
class ForcedRelationMap {
 public:
  explicit ForcedRelationMap(int n);

  int size() const { return n_; }
  std::optional<Relation> at(int i, int j) const;
  void set(int i, int j, Relation r);
  // Every ordered pair i != j has an entry.
  bool total() const;

  friend bool operator==(const ForcedRelationMap&, const ForcedRelationMap&) = default;

 private:
  int n_;
  std::vector<std::optional<Relation>> entries_;
};

bool is_feasible(const Placement& placement);

// Relations of (i, j) that hold in the placement. Throws InvalidInput when an
// index is out of range or i == j.
RelationMask spatial_relations(const Placement& placement, int i, int j);

RelationSets relation_sets(const Placement& placement);

// Throws InvalidInput on a size mismatch.
bool represents(const Representation& r, const Placement& placement);
bool represents(const Representation& r, const RelationTable& table);

// A relation alpha is forced for (i, j) when j is reachable from i along
// pairs whose only relation is alpha. Throws InvalidInput for an infeasible
// placement and InvariantViolation if a pair ever gets two forced relations.
ForcedRelationMap forced_relations(const Placement& placement);

bool is_forcing(const Placement& placement);

// Throws InvalidInput when the placement is not forcing.
Representation canonical_representation(const Placement& placement);

// result.rect(i) = placement.rect(perm(i)). Throws InvalidInput on a size
// mismatch.
Placement permute_placement(const Placement& placement, const Permutation& perm);

// Exchanges the roles of x and y.
Placement swap_axes(const Placement& placement);

}  // namespace rectrep
