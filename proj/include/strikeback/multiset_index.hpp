#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "strikeback/graph.hpp"

namespace strikeback {

/// Dense ranking of sorted multisets over {0..n-1}, lexicographic within
/// each size.
class MultisetIndexer {
 public:
  MultisetIndexer(int n, int max_size) : n_(n), max_size_(max_size) {
    count_.assign(static_cast<std::size_t>(max_size + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    count_[0].assign(static_cast<std::size_t>(n + 1), 1);
    for (int k = 1; k <= max_size; ++k)
      for (int m = 1; m <= n; ++m) {
        const std::uint64_t a = count_[k - 1][m];
        const std::uint64_t b = count_[k][m - 1];
        if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("multiset count overflow");
        count_[k][m] = a + b;
      }
  }

  int symbols() const { return n_; }
  int max_size() const { return max_size_; }

  /// Number of multisets of `size` over the n symbols: C(n+size-1, size).
  std::uint64_t count(int size) const { return count_[size][n_]; }

  std::uint64_t rank(const std::vector<Vertex>& sorted) const {
    int k = static_cast<int>(sorted.size());
    Vertex low = 0;
    std::uint64_t r = 0;
    for (Vertex x : sorted) {
      // multisets whose next element lies in [low, x)
      r += count_[k][n_ - low] - count_[k][n_ - x];
      low = x;
      --k;
    }
    return r;
  }

  std::vector<Vertex> unrank(int size, std::uint64_t r) const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size));
    Vertex low = 0;
    for (int k = size; k > 0; --k) {
      Vertex x = low;
      while (true) {
        const std::uint64_t below = count_[k][n_ - low] - count_[k][n_ - (x + 1)];
        if (r < below) break;
        ++x;
      }
      r -= count_[k][n_ - low] - count_[k][n_ - x];
      out.push_back(x);
      low = x;
    }
    return out;
  }

 private:
  int n_;
  int max_size_;
  std::vector<std::vector<std::uint64_t>> count_;  // count_[k][m]: size-k multisets over m symbols
};

}  // namespace strikeback
