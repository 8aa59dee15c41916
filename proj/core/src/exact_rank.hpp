#pragma once

// Rank of a small integer matrix over the rationals by Bareiss elimination.
// The division by the previous pivot is exact and keeps every intermediate
// entry a minor of the input, so nothing grows past Hadamard's bound.

#include <cstdint>
#include <utility>
#include <vector>

namespace borbits::detail {

inline int exact_matrix_rank(std::vector<std::vector<std::int64_t>> m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  std::int64_t prev = 1;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t k = c + 1; k < cols; ++k)
        m[r][k] = (m[r][k] * m[rank][c] - m[rank][k] * m[r][c]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace borbits::detail
