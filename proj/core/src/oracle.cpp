#include "rectrep/oracle.hpp"

#include <deque>
#include <random>
#include <vector>

#include "rectrep/error.hpp"
#include "rectrep/random.hpp"

namespace rectrep::oracle {

bool naive_is_plane(const Permutation& perm) {
  const int n = perm.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        for (int m = l + 1; m < n; ++m) {
          if (!(perm(j) < perm(i) && perm(i) < perm(m) && perm(m) < perm(l))) continue;
          bool has_k = false;
          for (int k = j + 1; k < l; ++k) {
            if (perm(i) < perm(k) && perm(k) < perm(m)) has_k = true;
          }
          if (!has_k) return false;
        }
      }
    }
  }
  return true;
}

namespace {

bool holds(const Placement& p, int i, int j, Relation r) {
  const Rect& a = p.rect(i);
  const Rect& b = p.rect(j);
  switch (r) {
    case Relation::kWest: return a.xmax <= b.xmin;
    case Relation::kSouth: return a.ymax <= b.ymin;
    case Relation::kEast: return b.xmax <= a.xmin;
    case Relation::kNorth: return b.ymax <= a.ymin;
  }
  return false;
}

bool only(const Placement& p, int i, int j, Relation r) {
  if (!holds(p, i, j, r)) return false;
  for (Relation other : kAllRelations) {
    if (other != r && holds(p, i, j, other)) return false;
  }
  return true;
}

}  // namespace

ForcedRelationMap naive_forced(const Placement& placement) {
  const int n = placement.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool any = false;
      for (Relation r : kAllRelations) any = any || holds(placement, i, j, r);
      if (!any) throw InvalidInput("placement is not feasible");
    }
  }

  ForcedRelationMap forced(n);
  for (Relation r : kAllRelations) {
    for (int start = 0; start < n; ++start) {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      std::deque<int> queue{start};
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
          if (v == u || seen[static_cast<std::size_t>(v)] || !only(placement, u, v, r)) continue;
          seen[static_cast<std::size_t>(v)] = true;
          queue.push_back(v);
        }
      }
      for (int v = 0; v < n; ++v) {
        if (v != start && seen[static_cast<std::size_t>(v)]) forced.set(start, v, r);
      }
    }
  }
  return forced;
}

std::optional<BadQuartet> naive_bad_quartet(const SequencePair& sp) {
  const int n = sp.size();
  const auto& pi = sp.pi;
  const auto& rho = sp.rho;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          if (!(pi.before(a, b) && pi.before(b, c) && pi.before(c, d))) continue;
          if (!(rho.before(b, a) && rho.before(a, d) && rho.before(d, c))) continue;
          bool window_empty = true;
          for (int e = 0; e < n; ++e) {
            if (pi.before(b, e) && pi.before(e, c) && rho.before(a, e) && rho.before(e, d)) {
              window_empty = false;
            }
          }
          if (window_empty) return BadQuartet{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

Placement random_feasible_placement(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);

  // order[t] is the element at rank t.
  std::vector<int> pi_order(static_cast<std::size_t>(n));
  std::vector<int> rho_rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pi_order[static_cast<std::size_t>(i)] = i;
  shuffle(pi_order, rng);
  std::vector<int> rho_order = pi_order;
  shuffle(rho_order, rng);
  for (int t = 0; t < n; ++t) rho_rank[static_cast<std::size_t>(rho_order[static_cast<std::size_t>(t)])] = t;

  std::vector<int> w(static_cast<std::size_t>(n));
  std::vector<int> h(static_cast<std::size_t>(n));
  std::vector<int> slack_x(static_cast<std::size_t>(n));
  std::vector<int> slack_y(static_cast<std::size_t>(n));
  auto slack = [&rng] { return draw_below(rng, 2) == 0 ? 0 : draw_between(rng, 1, 3); };
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    w[i] = draw_between(rng, 1, 8);
    h[i] = draw_between(rng, 1, 8);
    slack_x[i] = slack();
    slack_y[i] = slack();
  }

  // a before b in pi: a is left of b if b precedes a in rho, else below b.
  std::vector<long> x(static_cast<std::size_t>(n), 0);
  std::vector<long> y(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < n; ++t) {
    const auto b = static_cast<std::size_t>(pi_order[static_cast<std::size_t>(t)]);
    for (int s = 0; s < t; ++s) {
      const auto a = static_cast<std::size_t>(pi_order[static_cast<std::size_t>(s)]);
      if (rho_rank[b] < rho_rank[a]) {
        x[b] = std::max(x[b], x[a] + w[a]);
      } else {
        y[b] = std::max(y[b], y[a] + h[a]);
      }
    }
    x[b] += slack_x[b];
    y[b] += slack_y[b];
  }

  std::vector<Rect> rects;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    rects.push_back(Rect{Rational(x[i]), Rational(y[i]), Rational(x[i] + w[i]),
                         Rational(y[i] + h[i])});
  }
  return Placement(std::move(rects));
}

}  // namespace rectrep::oracle
