#include "rectrep/forcing.hpp"

#include <algorithm>
#include <string>

#include "rectrep/error.hpp"

namespace rectrep {
namespace {

// pi restricted to {0, ..., n-2}, values renumbered to stay contiguous.
Permutation without_top(const Permutation& pi) {
  const int top = pi.size() - 1;
  std::vector<int> image(static_cast<std::size_t>(top));
  for (int i = 0; i < top; ++i) {
    image[static_cast<std::size_t>(i)] = pi(i) < pi(top) ? pi(i) : pi(i) - 1;
  }
  return Permutation(std::move(image));
}

Rational max_ymax_except(const std::vector<Rect>& rects, int skip, bool& any) {
  Rational best;
  any = false;
  for (std::size_t k = 0; k < rects.size(); ++k) {
    if (static_cast<int>(k) == skip) continue;
    if (!any || rects[k].ymax > best) best = rects[k].ymax;
    any = true;
  }
  return best;
}

class Builder {
 public:
  explicit Builder(ConstructionChecks checks) : checks_(checks) {}

  std::vector<Rect> build(const Permutation& pi) {
    const int n = pi.size();
    if (n == 1) return {Rect{0, 0, 1, 1}};

    std::vector<Rect> rects;
    const int top = n - 1;
    if (pi.before(top - 1, top)) {
      rects = build(without_top(pi));
      if (pi(top) == n - 1) {
        place_on_top(rects);
      } else {
        place_beside_predecessor(pi, rects);
      }
    } else {
      rects = build(negate(pi));
      for (Rect& r : rects) r = Rect{r.ymin, r.xmin, r.ymax, r.xmax};
    }
    if (checks_ == ConstructionChecks::kEveryLevel) check_level(pi, rects, "inductive step");
    return rects;
  }

 private:
  static void check_level(const Permutation& pi, const std::vector<Rect>& rects,
                          const std::string& stage) {
    const Placement placement(rects);
    check_invariant(verify_forcing_for(pi, placement),
                    "forcing construction broke after " + stage + " for n = " +
                        std::to_string(pi.size()));
  }

  // The top element is last in both orders: a full-width strip above
  // everything.
  static void place_on_top(std::vector<Rect>& rects) {
    Rect strip = rects.front();
    for (const Rect& r : rects) {
      strip.xmin = std::min(strip.xmin, r.xmin);
      strip.xmax = std::max(strip.xmax, r.xmax);
      strip.ymax = std::max(strip.ymax, r.ymax);
    }
    strip.ymin = strip.ymax;
    strip.ymax = strip.ymin + 1;
    rects.push_back(strip);
  }

  void place_beside_predecessor(const Permutation& pi, std::vector<Rect>& rects) {
    const int top = pi.size() - 1;
    const Permutation rest = without_top(pi);

    const std::vector<int> west_preds = perm_digraph(negate(pi)).predecessors(top);
    check_invariant(west_preds.size() == 1,
                    "top element must have exactly one predecessor in G_{-pi}");
    const int j = west_preds.back();

    // Nothing may sit only-north of j, or raising j would break it.
    const RelationTable before_raise{Placement(rects)};
    for (int k = 0; k < top; ++k) {
      if (k == j) continue;
      check_invariant(before_raise.at(j, k) != RelationMask{Relation::kSouth},
                      "a rectangle is only north of the rectangle to be raised");
    }

    bool any_other = false;
    const Rational others_top = max_ymax_except(rects, j, any_other);
    if (any_other && rects[static_cast<std::size_t>(j)].ymax < others_top + 1) {
      rects[static_cast<std::size_t>(j)].ymax = others_top + 1;
    }
    if (checks_ == ConstructionChecks::kEveryLevel) check_level(rest, rects, "raising");

    const std::vector<int> south_preds = perm_digraph(pi).predecessors(top);
    check_invariant(!south_preds.empty(), "top element has no predecessor in G_pi");
    const int i = south_preds.front();
    if (i < j) {
      const auto below_j = std::count_if(south_preds.begin(), south_preds.end(),
                                         [j](int l) { return l < j; });
      check_invariant(below_j == 1, "more than one G_pi predecessor of the top lies below j");
      Rect& rj = rects[static_cast<std::size_t>(j)];
      const Rect& ri = rects[static_cast<std::size_t>(i)];
      if (rj.xmax >= ri.xmax) {
        rj.xmax = (std::max(ri.xmin, rj.xmin) + ri.xmax) / 2;
        check_invariant(rj.xmax < ri.xmax, "narrowing did not move j's right edge left of i's");
        if (checks_ == ConstructionChecks::kEveryLevel) check_level(rest, rects, "narrowing");
      }
    }

    const Rect& rj = rects[static_cast<std::size_t>(j)];
    Rational right = rects.front().xmax;
    for (const Rect& r : rects) right = std::max(right, r.xmax);
    check_invariant(rj.xmax < right, "no room east of j for the top element");
    rects.push_back(Rect{rj.xmax, rj.ymax - 1, right, rj.ymax});
  }

  ConstructionChecks checks_;
};

}  // namespace

Representation identity_pair_representation(const Permutation& pi) {
  return Representation::from_upper_triangle(pi.size(), [&](int i, int j) {
    return pi.before(i, j) ? Relation::kSouth : Relation::kWest;
  });
}

bool verify_forcing_for(const Permutation& pi, const Placement& placement) {
  if (pi.size() != placement.size()) {
    throw InvalidInput("permutation and placement sizes differ");
  }
  const RelationTable table(placement);
  if (!table.feasible()) return false;
  for (const auto& [i, j] : perm_digraph(pi).arcs) {
    if (table.at(i, j) != RelationMask{Relation::kSouth}) return false;
  }
  for (const auto& [i, j] : perm_digraph(negate(pi)).arcs) {
    if (table.at(i, j) != RelationMask{Relation::kWest}) return false;
  }
  return true;
}

ForcingCertificate construct_forcing_placement(const Permutation& pi, ConstructionChecks checks) {
  if (!is_biplane(pi)) throw InvalidInput("forcing placements are built for biplane permutations only");
  Placement placement(Builder(checks).build(pi));
  check_invariant(verify_forcing_for(pi, placement), "constructed placement is not forcing for pi");
  return ForcingCertificate{pi, std::move(placement), true};
}

CanonicalFamilyMember canonical_family_member(const Permutation& pi, const Permutation& rho) {
  if (pi.size() != rho.size()) throw InvalidInput("permutations differ in size");
  if (!is_biplane(rho)) throw InvalidInput("rho must be biplane");
  const ForcingCertificate cert = construct_forcing_placement(rho);
  Placement witness = permute_placement(cert.placement, pi);
  Representation representation = to_representation(SequencePair(pi, compose(rho, pi)));
  check_invariant(is_forcing(witness), "relabeled placement is not forcing");
  check_invariant(canonical_representation(witness) == representation,
                  "relabeled placement has an unexpected canonical representation");
  return CanonicalFamilyMember{std::move(representation), std::move(witness)};
}

std::vector<SequencePair> canonical_family_pairs(int n) {
  const std::vector<Permutation> perms = all_permutations(n);
  const std::vector<Permutation> biplane = enumerate_biplane(n);
  std::vector<SequencePair> out;
  out.reserve(perms.size() * biplane.size());
  for (const Permutation& pi : perms) {
    for (const Permutation& rho : biplane) out.emplace_back(pi, compose(rho, pi));
  }
  return out;
}

}  // namespace rectrep
