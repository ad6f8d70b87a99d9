#pragma once
// Small hand-built placements and representations, with 1-based ids
// converted to the library's 0-based indices.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rectrep/geometry.hpp"
#include "rectrep/rational.hpp"

namespace fixtures {

using rectrep::Placement;
using rectrep::Rational;
using rectrep::Rect;
using rectrep::Relation;
using rectrep::Representation;

inline Rect box(const char* xmin, const char* ymin, const char* xmax, const char* ymax) {
  return Rect{rectrep::parse_rational(xmin), rectrep::parse_rational(ymin),
              rectrep::parse_rational(xmax), rectrep::parse_rational(ymax)};
}

inline Placement two_by_two() {
  return Placement({box("1", "1", "5/2", "3"), box("5/2", "1", "4", "2"),
                    box("1", "3", "5/2", "4"), box("5/2", "2", "4", "4")});
}

inline Placement two_by_two_forcing() {
  return Placement({box("1", "1", "2", "3"), box("2", "1", "4", "2"), box("1", "3", "3", "4"),
                    box("3", "2", "4", "4")});
}

inline Placement seven_chain() {
  return Placement({box("1", "1", "4", "2"), box("1", "2", "2", "6"), box("4", "1", "5", "3"),
                    box("2", "3", "5", "4"), box("2", "4", "3", "6"), box("5", "1", "6", "5"),
                    box("3", "5", "6", "6")});
}

inline Placement five_gap() {
  return Placement({box("1", "1", "3", "2"), box("1", "2", "2", "4"), box("3", "1", "5", "3"),
                    box("2", "3", "4", "4"), box("4", "3", "5", "4")});
}

// Upper-triangle entries (i, j, relation) with 1-based i < j.
inline Representation from_pairs(int n, std::initializer_list<std::pair<std::pair<int, int>, Relation>> pairs) {
  std::vector<Relation> upper(static_cast<std::size_t>(n * n), Relation::kWest);
  for (const auto& [ij, rel] : pairs) {
    upper[static_cast<std::size_t>((ij.first - 1) * n + (ij.second - 1))] = rel;
  }
  return Representation::from_upper_triangle(
      n, [&](int i, int j) { return upper[static_cast<std::size_t>(i * n + j)]; });
}

// The two tabulated representations of the four-rectangle example; they
// differ only at pair (2, 3).
inline Representation two_by_two_r() {
  return from_pairs(4, {{{1, 2}, Relation::kWest}, {{1, 3}, Relation::kSouth}, {{1, 4}, Relation::kWest},
                        {{2, 3}, Relation::kSouth}, {{2, 4}, Relation::kSouth}, {{3, 4}, Relation::kWest}});
}

inline Representation two_by_two_r_prime() {
  return from_pairs(4, {{{1, 2}, Relation::kWest}, {{1, 3}, Relation::kSouth}, {{1, 4}, Relation::kWest},
                        {{2, 3}, Relation::kEast}, {{2, 4}, Relation::kSouth}, {{3, 4}, Relation::kWest}});
}

// Direct coordinate test of one relation, independent of RelationTable.
inline bool holds(const Placement& p, int i, int j, Relation rel) {
  const Rect& a = p.rect(i);
  const Rect& b = p.rect(j);
  switch (rel) {
    case Relation::kWest: return a.xmax <= b.xmin;
    case Relation::kSouth: return a.ymax <= b.ymin;
    case Relation::kEast: return b.xmax <= a.xmin;
    case Relation::kNorth: return b.ymax <= a.ymin;
  }
  return false;
}

inline bool directly_represents(const Representation& r, const Placement& p) {
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (i != j && !holds(p, i, j, r.at(i, j))) return false;
    }
  }
  return true;
}

}  // namespace fixtures
