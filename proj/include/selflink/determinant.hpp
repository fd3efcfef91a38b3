#pragma once

// Division-free determinant over an arbitrary commutative ring.
//
// Laplace expansion along the rows, memoized over the set of columns already
// used: f(S) is the signed sum over all ways of placing rows 0..|S|-1 into
// the columns S. That is O(2^m * m) ring multiplications for an m x m matrix
// and never divides, so it is exact over Z/q for composite q and over
// polynomial rings.

#include <bit>
#include <cstdint>
#include <vector>

#include "selflink/error.hpp"

namespace selflink {

inline constexpr std::size_t kMaxDeterminantSize = 16;

template <typename T>
T determinant(const std::vector<std::vector<T>>& matrix, const T& zero, const T& one) {
  const std::size_t m = matrix.size();
  if (m == 0) return one;
  if (m > kMaxDeterminantSize) throw PreconditionError("determinant: matrix too large");
  for (const auto& row : matrix) {
    if (row.size() != m) throw PreconditionError("determinant: matrix is not square");
  }

  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<T> partial(std::size_t{full} + 1, zero);
  std::vector<bool> reached(std::size_t{full} + 1, false);
  partial[0] = one;
  reached[0] = true;

  for (std::uint32_t used = 0; used < full; ++used) {
    if (!reached[used]) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(used));
    for (std::size_t col = 0; col < m; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if (used & bit) continue;
      // Inversions added by placing this row at `col`: used columns to its right.
      const bool odd = std::popcount(used >> col) % 2 != 0;
      T step = partial[used] * matrix[row][col];
      partial[used | bit] = odd ? partial[used | bit] - step : partial[used | bit] + step;
      reached[used | bit] = true;
    }
  }
  return partial[full];
}

}  // namespace selflink
