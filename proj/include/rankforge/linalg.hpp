#pragma once

#include <cstddef>
#include <vector>

#include "rankforge/matrix.hpp"

namespace rankforge {

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Rows are first scaled by the lcm of their denominators (rank-preserving),
/// then eliminated over the integers with the one-step exact division by the
/// previous pivot. No floating point is involved anywhere.
inline std::size_t real_rank(const RationalMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < nc; ++c)
      scale = lcm(scale, denominator(m.at(r, c)));
    for (std::size_t c = 0; c < nc; ++c) {
      const Rational& q = m.at(r, c);
      a[r][c] = numerator(q) * (scale / denominator(q));
    }
  }

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t pivot = rank;
    while (pivot < nr && a[pivot][col] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[rank], a[pivot]);
    const Integer& p = a[rank][col];
    for (std::size_t i = rank + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j)
        a[i][j] = (a[i][j] * p - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

inline std::size_t real_rank(const PartialMatrix& m) {
  return real_rank(RationalMatrix::from_partial(m));
}

/// Rank over GF(2); equals the xor-rectangle measure for total matrices.
inline std::size_t gf2_rank(const PartialMatrix& m) {
  if (!m.total())
    throw UnsupportedError("gf2_rank is defined for total matrices only");
  std::vector<Bitset> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_mask(r, Cell::One));

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i)
      if (rows[i].test(col)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace rankforge
