#include "rectrep/evaluate.hpp"

#include <algorithm>
#include <string>

#include "rectrep/error.hpp"
#include "rectrep/parallel.hpp"

namespace rectrep {
namespace {

Rational objective_value(const Placement& placement, const Netlist& netlist,
                         Objective objective) {
  if (objective == Objective::kArea) {
    const BoxSize box = bounding_box(placement);
    return box.width * box.height;
  }
  return hpwl(placement, netlist);
}

struct Candidate {
  Rational value;
  std::optional<SequencePair> sp;
};

// Smaller value first, then lexicographically smaller (pi, rho).
bool better(const Rational& value, const SequencePair& sp, const Candidate& incumbent) {
  if (!incumbent.sp) return true;
  if (value != incumbent.value) return value < incumbent.value;
  return sp < *incumbent.sp;
}

}  // namespace

Dimensions::Dimensions(std::vector<Rational> w, std::vector<Rational> h)
    : widths(std::move(w)), heights(std::move(h)) {
  if (widths.empty() || widths.size() != heights.size()) {
    throw InvalidInput("widths and heights must be nonempty and of equal length");
  }
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (widths[i] <= 0 || heights[i] <= 0) {
      throw InvalidInput("rectangle " + std::to_string(i + 1) + " has a non-positive size");
    }
  }
}

Dimensions Dimensions::of(const Placement& placement) {
  std::vector<Rational> w;
  std::vector<Rational> h;
  for (const Rect& r : placement.rects()) {
    w.emplace_back(r.xmax - r.xmin);
    h.emplace_back(r.ymax - r.ymin);
  }
  return Dimensions(std::move(w), std::move(h));
}

void validate(const Netlist& netlist, int n) {
  for (const auto& net : netlist.nets) {
    if (net.size() < 2) throw InvalidInput("every net needs at least two members");
    for (int v : net) {
      if (v < 0 || v >= n) throw InvalidInput("net member " + std::to_string(v + 1) + " out of range");
    }
  }
}

Placement compact(const SequencePair& sp, const Dimensions& dims) {
  const int n = sp.size();
  if (dims.size() != n) throw InvalidInput("dimensions and sequence pair sizes differ");

  // Every west or south predecessor of b comes before b in pi, so a single
  // pass in pi order settles all longest paths.
  const Permutation order = sp.pi.inverse();
  std::vector<Rational> x(static_cast<std::size_t>(n), 0);
  std::vector<Rational> y(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < n; ++t) {
    const int b = order(t);
    auto& xb = x[static_cast<std::size_t>(b)];
    auto& yb = y[static_cast<std::size_t>(b)];
    for (int s = 0; s < t; ++s) {
      const int a = order(s);
      const auto ua = static_cast<std::size_t>(a);
      if (sp.rho.before(b, a)) {
        xb = std::max<Rational>(xb, x[ua] + dims.widths[ua]);
      } else {
        yb = std::max<Rational>(yb, y[ua] + dims.heights[ua]);
      }
    }
  }

  std::vector<Rect> rects;
  rects.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    rects.push_back(Rect{x[i], y[i], x[i] + dims.widths[i], y[i] + dims.heights[i]});
  }
  Placement placement(std::move(rects));
  check_invariant(represents(to_representation(sp), placement),
                  "compacted placement is not represented by its sequence pair");
  return placement;
}

BoxSize bounding_box(const Placement& placement) {
  const Rect& first = placement.rect(0);
  Rational xmin = first.xmin, xmax = first.xmax, ymin = first.ymin, ymax = first.ymax;
  for (const Rect& r : placement.rects()) {
    xmin = std::min(xmin, r.xmin);
    ymin = std::min(ymin, r.ymin);
    xmax = std::max(xmax, r.xmax);
    ymax = std::max(ymax, r.ymax);
  }
  return BoxSize{xmax - xmin, ymax - ymin};
}

Rational hpwl(const Placement& placement, const Netlist& netlist) {
  validate(netlist, placement.size());
  Rational total = 0;
  for (const auto& net : netlist.nets) {
    // Doubled centers; halved once per net.
    std::optional<Rational> lo_x, hi_x, lo_y, hi_y;
    for (int v : net) {
      const Rect& r = placement.rect(v);
      const Rational cx = r.xmin + r.xmax;
      const Rational cy = r.ymin + r.ymax;
      if (!lo_x || cx < *lo_x) lo_x = cx;
      if (!hi_x || cx > *hi_x) hi_x = cx;
      if (!lo_y || cy < *lo_y) lo_y = cy;
      if (!hi_y || cy > *hi_y) hi_y = cy;
    }
    total += (*hi_x - *lo_x + *hi_y - *lo_y) / 2;
  }
  return total;
}

OptimumResult exhaustive_optimum(const Dimensions& dims, const Netlist& netlist,
                                 Objective objective, bool restricted, int limit) {
  const int n = dims.size();
  if (n > limit) {
    throw InvalidInput("exhaustive optimization is limited to n <= " + std::to_string(limit));
  }
  validate(netlist, n);

  const std::vector<Permutation> pis = all_permutations(n);
  const std::vector<Permutation> seconds = restricted ? enumerate_plane(n) : pis;

  std::vector<Candidate> per_pi(pis.size());
  std::vector<std::uint64_t> evaluated(pis.size(), 0);
  parallel_for(pis.size(), [&](std::size_t k) {
    const Permutation& pi = pis[k];
    Candidate& best = per_pi[k];
    for (const Permutation& second : seconds) {
      SequencePair sp = restricted ? from_relabeling(pi, second) : SequencePair(pi, second);
      const Rational value = objective_value(compact(sp, dims), netlist, objective);
      ++evaluated[k];
      if (better(value, sp, best)) {
        best.value = value;
        best.sp = std::move(sp);
      }
    }
  });

  Candidate overall;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < pis.size(); ++k) {
    total += evaluated[k];
    if (per_pi[k].sp && better(per_pi[k].value, *per_pi[k].sp, overall)) overall = per_pi[k];
  }
  return OptimumResult{overall.value, *overall.sp, total};
}

}  // namespace rectrep
