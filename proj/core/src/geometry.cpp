#include "rectrep/geometry.hpp"

#include <bit>
#include <string>

#include "rectrep/error.hpp"
#include "rectrep/permutation.hpp"

namespace rectrep {
namespace {

void check_index(int n, int i) {
  if (i < 0 || i >= n) {
    throw InvalidInput("rectangle index " + std::to_string(i) + " out of range for n = " +
                       std::to_string(n));
  }
}

RelationMask relations_of(const Rect& a, const Rect& b) {
  RelationMask mask;
  if (a.xmax <= b.xmin) mask.insert(Relation::kWest);
  if (a.ymax <= b.ymin) mask.insert(Relation::kSouth);
  if (b.xmax <= a.xmin) mask.insert(Relation::kEast);
  if (b.ymax <= a.ymin) mask.insert(Relation::kNorth);
  return mask;
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kWest: return "west";
    case Relation::kSouth: return "south";
    case Relation::kEast: return "east";
    case Relation::kNorth: return "north";
  }
  return "?";
}

Relation relation_from_string(std::string_view name) {
  for (Relation r : kAllRelations) {
    if (to_string(r) == name) return r;
  }
  throw ParseError("unknown spatial relation '" + std::string(name) + "'");
}

int RelationMask::size() const { return std::popcount(bits_); }

std::optional<Relation> RelationMask::only() const {
  if (size() != 1) return std::nullopt;
  return static_cast<Relation>(std::countr_zero(bits_));
}

RelationMask RelationMask::flipped() const {
  RelationMask out;
  for (Relation r : kAllRelations) {
    if (contains(r)) out.insert(flip(r));
  }
  return out;
}

Placement::Placement(std::vector<Rect> rects) : rects_(std::move(rects)) {
  if (rects_.empty()) throw InvalidInput("a placement needs at least one rectangle");
  for (std::size_t i = 0; i < rects_.size(); ++i) {
    const Rect& r = rects_[i];
    if (!(r.xmin < r.xmax) || !(r.ymin < r.ymax)) {
      throw InvalidInput("rectangle " + std::to_string(i + 1) +
                         " must satisfy xmin < xmax and ymin < ymax");
    }
  }
}

RelationTable::RelationTable(const Placement& placement)
    : n_(placement.size()),
      masks_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const RelationMask mask = relations_of(placement.rect(i), placement.rect(j));
      masks_[static_cast<std::size_t>(i * n_ + j)] = mask;
      masks_[static_cast<std::size_t>(j * n_ + i)] = mask.flipped();
    }
  }
}

bool RelationTable::feasible() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j).empty()) return false;
    }
  }
  return true;
}

const BitMatrix& RelationSets::of(Relation r) const {
  switch (r) {
    case Relation::kWest: return west;
    case Relation::kSouth: return south;
    case Relation::kEast: return east;
    case Relation::kNorth: return north;
  }
  throw InvalidInput("bad relation");
}

Representation::Representation(int n)
    : n_(n),
      table_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Relation::kWest) {}

Representation Representation::from_table(int n, std::vector<Relation> table) {
  if (n < 1 || table.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InvalidInput("representation table must have n*n entries");
  }
  Representation r(n);
  r.table_ = std::move(table);
  return r;
}

Relation Representation::at(int i, int j) const {
  check_index(n_, i);
  check_index(n_, j);
  if (i == j) throw InvalidInput("representations are undefined on the diagonal");
  return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(j)];
}

bool Representation::flip_consistent() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (at(j, i) != flip(at(i, j))) return false;
    }
  }
  return true;
}

bool operator==(const Representation& a, const Representation& b) {
  if (a.n_ != b.n_) return false;
  for (int i = 0; i < a.n_; ++i) {
    for (int j = 0; j < a.n_; ++j) {
      if (i != j && a.at(i, j) != b.at(i, j)) return false;
    }
  }
  return true;
}

ForcedRelationMap::ForcedRelationMap(int n)
    : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

std::optional<Relation> ForcedRelationMap::at(int i, int j) const {
  check_index(n_, i);
  check_index(n_, j);
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
}

void ForcedRelationMap::set(int i, int j, Relation r) {
  check_index(n_, i);
  check_index(n_, j);
  if (i == j) throw InvalidInput("forced relations are undefined on the diagonal");
  auto& slot = entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                        static_cast<std::size_t>(j)];
  check_invariant(!slot.has_value() || *slot == r,
                  "two different forced relations for pair (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ")");
  slot = r;
}

bool ForcedRelationMap::total() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && !at(i, j).has_value()) return false;
    }
  }
  return true;
}

bool is_feasible(const Placement& placement) { return RelationTable(placement).feasible(); }

RelationMask spatial_relations(const Placement& placement, int i, int j) {
  check_index(placement.size(), i);
  check_index(placement.size(), j);
  if (i == j) throw InvalidInput("spatial relations need two distinct rectangles");
  return relations_of(placement.rect(i), placement.rect(j));
}

RelationSets relation_sets(const Placement& placement) {
  const int n = placement.size();
  const RelationTable table(placement);
  RelationSets sets{BitMatrix(n), BitMatrix(n), BitMatrix(n), BitMatrix(n)};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const RelationMask mask = table.at(a, b);
      if (mask.contains(Relation::kNorth)) sets.north.set(a, b);
      if (mask.contains(Relation::kSouth)) sets.south.set(a, b);
      if (mask.contains(Relation::kEast)) sets.east.set(a, b);
      if (mask.contains(Relation::kWest)) sets.west.set(a, b);
    }
  }
  return sets;
}

bool represents(const Representation& r, const RelationTable& table) {
  if (r.size() != table.size()) {
    throw InvalidInput("representation and placement sizes differ");
  }
  const int n = r.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && !table.at(i, j).contains(r.at(i, j))) return false;
    }
  }
  return true;
}

bool represents(const Representation& r, const Placement& placement) {
  if (r.size() != placement.size()) {
    throw InvalidInput("representation and placement sizes differ");
  }
  return represents(r, RelationTable(placement));
}

ForcedRelationMap forced_relations(const Placement& placement) {
  const int n = placement.size();
  const RelationTable table(placement);
  if (!table.feasible()) throw InvalidInput("forced relations need a feasible placement");

  ForcedRelationMap forced(n);
  for (Relation alpha : kAllRelations) {
    BitMatrix only(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b && table.at(a, b).only() == alpha) only.set(a, b);
      }
    }
    const BitMatrix reach = only.transitive_closure();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        // A closed walk would make some pair related to itself; feasibility
        // rules that out, so the diagonal of `reach` stays empty.
        check_invariant(i != j || !reach.test(i, i), "cycle in an only-relation digraph");
        if (i != j && reach.test(i, j)) forced.set(i, j, alpha);
      }
    }
  }
  return forced;
}

bool is_forcing(const Placement& placement) {
  if (!is_feasible(placement)) return false;
  return forced_relations(placement).total();
}

Representation canonical_representation(const Placement& placement) {
  if (!is_feasible(placement)) throw InvalidInput("placement is not feasible");
  const ForcedRelationMap forced = forced_relations(placement);
  if (!forced.total()) throw InvalidInput("placement is not forcing");
  const int n = placement.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      check_invariant(forced.at(j, i) == flip(*forced.at(i, j)),
                      "forced relations are not flip-symmetric");
    }
  }
  return Representation::from_upper_triangle(
      n, [&](int i, int j) { return *forced.at(i, j); });
}

Placement permute_placement(const Placement& placement, const Permutation& perm) {
  if (perm.size() != placement.size()) {
    throw InvalidInput("permutation and placement sizes differ");
  }
  std::vector<Rect> rects;
  rects.reserve(static_cast<std::size_t>(placement.size()));
  for (int i = 0; i < placement.size(); ++i) rects.push_back(placement.rect(perm(i)));
  return Placement(std::move(rects));
}

Placement swap_axes(const Placement& placement) {
  std::vector<Rect> rects;
  rects.reserve(static_cast<std::size_t>(placement.size()));
  for (const Rect& r : placement.rects()) rects.push_back({r.ymin, r.xmin, r.ymax, r.xmax});
  return Placement(std::move(rects));
}

}  // namespace rectrep
