#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace rectrep {

// Dense n x n boolean matrix stored as bit rows; used as the adjacency matrix
// of small digraphs on vertices 0..n-1.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n);

  int size() const { return n_; }

  bool test(int row, int col) const {
    return (bits_[index(row, col)] >> (col & 63)) & 1U;
  }
  void set(int row, int col) { bits_[index(row, col)] |= bit(col); }
  void reset(int row, int col) { bits_[index(row, col)] &= ~bit(col); }

  // Row-wise |= of another row; the building block of the closure.
  void or_row_into(int target_row, int source_row);

  // Non-reflexive transitive closure: result(i, j) iff there is a path of at
  // least one arc from i to j. O(n^3 / 64).
  BitMatrix transitive_closure() const;

  std::size_t count() const;
  std::vector<std::pair<int, int>> arcs() const;  // sorted lexicographically

  BitMatrix& operator|=(const BitMatrix& other);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  static std::uint64_t bit(int col) { return std::uint64_t{1} << (col & 63); }
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * words_ + (col >> 6);
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace rectrep
