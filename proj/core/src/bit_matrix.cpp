#include "rectrep/bit_matrix.hpp"

#include <bit>

namespace rectrep {

BitMatrix::BitMatrix(int n)
    : n_(n),
      words_((static_cast<std::size_t>(n) + 63) / 64),
      bits_(static_cast<std::size_t>(n) * words_, 0) {}

void BitMatrix::or_row_into(int target_row, int source_row) {
  const std::size_t t = static_cast<std::size_t>(target_row) * words_;
  const std::size_t s = static_cast<std::size_t>(source_row) * words_;
  for (std::size_t w = 0; w < words_; ++w) bits_[t + w] |= bits_[s + w];
}

BitMatrix BitMatrix::transitive_closure() const {
  // Warshall over bit rows: after step k, row i holds everything reachable
  // through intermediate vertices 0..k.
  BitMatrix closure = *this;
  for (int k = 0; k < n_; ++k) {
    for (int i = 0; i < n_; ++i) {
      if (closure.test(i, k)) closure.or_row_into(i, k);
    }
  }
  return closure;
}

std::size_t BitMatrix::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::pair<int, int>> BitMatrix::arcs() const {
  std::vector<std::pair<int, int>> result;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (test(i, j)) result.emplace_back(i, j);
    }
  }
  return result;
}

BitMatrix& BitMatrix::operator|=(const BitMatrix& other) {
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
  return *this;
}

}  // namespace rectrep
