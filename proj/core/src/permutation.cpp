#include "rectrep/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rectrep/error.hpp"
#include "rectrep/parallel.hpp"

namespace rectrep {
namespace {

// counts(p, v) = number of positions k < p with perm(k) < v.
class DominanceCounts {
 public:
  explicit DominanceCounts(const std::vector<int>& image)
      : stride_(image.size() + 1), counts_(stride_ * stride_, 0) {
    const std::size_t n = image.size();
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t v = 0; v <= n; ++v) {
        counts_[(p + 1) * stride_ + v] =
            counts_[p * stride_ + v] + (static_cast<std::size_t>(image[p]) < v ? 1 : 0);
      }
    }
  }

  // Points with lo_pos < position < hi_pos and lo_val < value < hi_val.
  int strictly_inside(int lo_pos, int hi_pos, int lo_val, int hi_val) const {
    if (hi_pos - lo_pos < 2 || hi_val - lo_val < 2) return 0;
    return at(hi_pos, hi_val) - at(lo_pos + 1, hi_val) - at(hi_pos, lo_val + 1) +
           at(lo_pos + 1, lo_val + 1);
  }

 private:
  int at(int p, int v) const {
    return counts_[static_cast<std::size_t>(p) * stride_ + static_cast<std::size_t>(v)];
  }

  std::size_t stride_;
  std::vector<int> counts_;
};

std::optional<std::array<int, 4>> find_pattern_in_image(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  if (n < 4) return std::nullopt;
  const DominanceCounts counts(image);
  for (int j = 1; j < n - 2; ++j) {
    for (int i = 0; i < j; ++i) {
      if (image[i] <= image[j]) continue;
      for (int l = j + 1; l < n - 1; ++l) {
        if (image[l] <= image[i]) continue;
        for (int m = l + 1; m < n; ++m) {
          if (image[m] <= image[i] || image[m] >= image[l]) continue;
          if (counts.strictly_inside(j, l, image[i], image[m]) == 0) {
            return std::array<int, 4>{i, j, l, m};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Does the prefix image[0..m] contain a forbidden pattern whose last point is
// at position m? `reflected` checks the value-complemented pattern instead.
bool completes_pattern_at(const std::vector<int>& image, int m, bool reflected) {
  auto less = [reflected](int a, int b) { return reflected ? a > b : a < b; };
  for (int l = 2; l < m; ++l) {
    for (int j = 1; j < l; ++j) {
      for (int i = 0; i < j; ++i) {
        // j < i < m < l in pattern order.
        if (!(less(image[j], image[i]) && less(image[i], image[m]) && less(image[m], image[l]))) {
          continue;
        }
        bool window_empty = true;
        for (int k = j + 1; k < l && window_empty; ++k) {
          if (less(image[i], image[k]) && less(image[k], image[m])) window_empty = false;
        }
        if (window_empty) return true;
      }
    }
  }
  return false;
}

bool in_class(const Permutation& perm, PermutationClass cls) {
  return cls == PermutationClass::kPlane ? is_plane(perm) : is_biplane(perm);
}

// Visits the permutations with image[0] == first in lexicographic order.
template <typename F>
void for_each_with_first(int n, int first, F&& visit) {
  std::vector<int> image(static_cast<std::size_t>(n));
  image[0] = first;
  int next = 0;
  for (int k = 1; k < n; ++k) {
    if (next == first) ++next;
    image[static_cast<std::size_t>(k)] = next++;
  }
  do {
    visit(image);
  } while (std::next_permutation(image.begin() + 1, image.end()));
}

class PrunedSearch {
 public:
  PrunedSearch(int n, PermutationClass cls, int first)
      : n_(n), cls_(cls), image_(static_cast<std::size_t>(n)), used_(static_cast<std::size_t>(n)) {
    image_[0] = first;
    used_[static_cast<std::size_t>(first)] = true;
  }

  template <typename F>
  void run(F&& emit) {
    extend(1, emit);
  }

 private:
  template <typename F>
  void extend(int position, F& emit) {
    if (position == n_) {
      emit(image_);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      image_[static_cast<std::size_t>(position)] = v;
      if (completes_pattern_at(image_, position, false)) continue;
      if (cls_ == PermutationClass::kBiplane && completes_pattern_at(image_, position, true)) {
        continue;
      }
      used_[static_cast<std::size_t>(v)] = true;
      extend(position + 1, emit);
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  int n_;
  PermutationClass cls_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

void check_size(int n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  if (n < 1) throw InvalidInput("a permutation needs at least one element");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : image_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("not a bijection on " + std::to_string(n) + " elements");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  check_size(n);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_based(std::span<const int> image) {
  std::vector<int> zero_based(image.begin(), image.end());
  for (int& v : zero_based) --v;
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_one_based(std::initializer_list<int> image) {
  return from_one_based(std::span<const int>(image.begin(), image.size()));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out = image_;
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(inv));
}

Permutation negate(const Permutation& perm) {
  std::vector<int> image = perm.image();
  for (int& v : image) v = perm.size() - 1 - v;
  return Permutation(std::move(image));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw InvalidInput("cannot compose permutations of different sizes");
  std::vector<int> image(static_cast<std::size_t>(inner.size()));
  for (int i = 0; i < inner.size(); ++i) image[static_cast<std::size_t>(i)] = outer(inner(i));
  return Permutation(std::move(image));
}

bool PermDigraph::has_arc(int from, int to) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::pair{from, to});
}

std::vector<int> PermDigraph::predecessors(int v) const {
  std::vector<int> preds;
  for (const auto& [from, to] : arcs) {
    if (to == v) preds.push_back(from);
  }
  std::sort(preds.begin(), preds.end());
  return preds;
}

BitMatrix PermDigraph::adjacency() const {
  BitMatrix m(n);
  for (const auto& [from, to] : arcs) m.set(from, to);
  return m;
}

PermDigraph perm_digraph(const Permutation& perm) {
  const int n = perm.size();
  PermDigraph graph{n, {}};
  for (int i = 0; i < n; ++i) {
    // Smallest value above perm(i) among positions strictly between i and j.
    int bound = n;
    for (int j = i + 1; j < n; ++j) {
      if (perm(j) <= perm(i)) continue;
      if (perm(j) < bound) graph.arcs.emplace_back(i, j);
      bound = std::min(bound, perm(j));
    }
  }
  return graph;
}

bool reachable(const Permutation& perm, int i, int j) {
  const int n = perm.size();
  if (i < 0 || i >= n || j < 0 || j >= n) throw InvalidInput("element index out of range");
  return i <= j && perm(i) <= perm(j);
}

std::optional<std::array<int, 4>> find_plane_pattern(const Permutation& perm) {
  return find_pattern_in_image(perm.image());
}

bool is_plane(const Permutation& perm) { return !find_plane_pattern(perm).has_value(); }

bool is_biplane(const Permutation& perm) { return is_plane(perm) && is_plane(negate(perm)); }

void for_each_in_class(int n, PermutationClass cls,
                       const std::function<void(const Permutation&)>& visit) {
  check_size(n);
  for (int first = 0; first < n; ++first) {
    for_each_with_first(n, first, [&](const std::vector<int>& image) {
      Permutation perm(image);
      if (in_class(perm, cls)) visit(perm);
    });
  }
}

namespace {

std::vector<Permutation> enumerate_filtered(int n, PermutationClass cls) {
  check_size(n);
  std::vector<std::vector<Permutation>> buckets(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t first) {
    for_each_with_first(n, static_cast<int>(first), [&](const std::vector<int>& image) {
      Permutation perm(image);
      if (in_class(perm, cls)) buckets[first].push_back(std::move(perm));
    });
  });
  std::vector<Permutation> out;
  for (auto& bucket : buckets) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return out;
}

}  // namespace

std::vector<Permutation> enumerate_plane(int n) {
  return enumerate_filtered(n, PermutationClass::kPlane);
}

std::vector<Permutation> enumerate_biplane(int n) {
  return enumerate_filtered(n, PermutationClass::kBiplane);
}

std::vector<Permutation> enumerate_pruned(int n, PermutationClass cls) {
  check_size(n);
  std::vector<std::vector<Permutation>> buckets(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t first) {
    PrunedSearch(n, cls, static_cast<int>(first)).run([&](const std::vector<int>& image) {
      buckets[first].emplace_back(image);
    });
  });
  std::vector<Permutation> out;
  for (auto& bucket : buckets) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return out;
}

std::uint64_t count_class(int n, PermutationClass cls) {
  check_size(n);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t first) {
    for_each_with_first(n, static_cast<int>(first), [&](const std::vector<int>& image) {
      const bool plane = !find_pattern_in_image(image).has_value();
      if (!plane) return;
      if (cls == PermutationClass::kBiplane) {
        std::vector<int> reflected = image;
        for (int& v : reflected) v = n - 1 - v;
        if (find_pattern_in_image(reflected).has_value()) return;
      }
      ++counts[first];
    });
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t count_class_pruned(int n, PermutationClass cls) {
  check_size(n);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t first) {
    PrunedSearch(n, cls, static_cast<int>(first)).run([&](const std::vector<int>&) {
      ++counts[first];
    });
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::vector<Permutation> all_permutations(int n) {
  check_size(n);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace rectrep
