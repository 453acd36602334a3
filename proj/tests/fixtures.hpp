#pragma once

#include <random>
#include <string>
#include <vector>

#include "rankforge/matrix.hpp"
#include "rankforge/rect.hpp"

namespace fixtures {

// 5x6 gap instance: all columns with a 1 in the bottom row and two 1's among
// the top four rows. Nonnegative rank 4, binary rank 5.
inline const char* kGap45 =
    "111000\n"
    "100110\n"
    "010101\n"
    "001011\n"
    "111111\n";

// 12x12 gap instance: three 3x3 off-diagonal blocks plus three half-weight
// mixing rows. Nonnegative rank 9, binary rank 12.
inline const char* kGap912 =
    "110000000100\n"
    "101000000010\n"
    "011000000001\n"
    "000110000100\n"
    "000101000010\n"
    "000011000001\n"
    "000000110100\n"
    "000000101010\n"
    "000000011001\n"
    "111111000111\n"
    "000111111111\n"
    "111000111111\n";

// 4x4 example: admits a 3-rectangle cover with rectangular leftovers, yet has
// binary rank 4.
inline const char* kCoverEx =
    "1101\n"
    "1011\n"
    "0111\n"
    "1111\n";

// 4x4 example with binary rank 3 but four distinct nonzero rows and columns.
inline const char* kTypesEx =
    "0100\n"
    "1110\n"
    "0111\n"
    "0011\n";

// 4x3 example admitting a nonnegative decomposition with three pairwise
// incompatible supports.
inline const char* kIncompatEx =
    "110\n"
    "101\n"
    "011\n"
    "111\n";

inline rankforge::PartialMatrix gap45() { return rankforge::parse_matrix(kGap45); }
inline rankforge::PartialMatrix gap912() { return rankforge::parse_matrix(kGap912); }
inline rankforge::PartialMatrix cover_ex() { return rankforge::parse_matrix(kCoverEx); }
inline rankforge::PartialMatrix types_ex() { return rankforge::parse_matrix(kTypesEx); }
inline rankforge::PartialMatrix incompat_ex() { return rankforge::parse_matrix(kIncompatEx); }

// Supports of the rank-4 nonnegative decomposition of gap45: component i
// spans rows {i, 4} and the columns where row i has a 1.
inline std::vector<rankforge::Rect> gap45_supports() {
  auto m = gap45();
  std::vector<rankforge::Rect> out;
  for (std::size_t i = 0; i < 4; ++i) {
    rankforge::Bitset rows(5), cols = m.row_mask(i, rankforge::Cell::One);
    rows.set(i);
    rows.set(4);
    out.emplace_back(rows, cols);
  }
  return out;
}

// Supports of the incompat_ex decomposition: {0,3}x{0,1}, {1,3}x{0,2},
// {2,3}x{1,2}. Pairwise incompatible in both orders.
inline std::vector<rankforge::Rect> incompat_supports() {
  using rankforge::Rect;
  return {Rect(4, 3, {0, 3}, {0, 1}), Rect(4, 3, {1, 3}, {0, 2}),
          Rect(4, 3, {2, 3}, {1, 2})};
}

inline rankforge::PartialMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim,
                                              double one_p, double star_p) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  rankforge::PartialMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      double x = coin(rng);
      if (x < one_p)
        m.set(r, c, rankforge::Cell::One);
      else if (x < one_p + star_p)
        m.set(r, c, rankforge::Cell::Star);
    }
  return m;
}

}  // namespace fixtures
