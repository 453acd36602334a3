#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankforge/errors.hpp"
#include "rankforge/rational.hpp"

namespace rankforge {

using Bitset = boost::dynamic_bitset<>;

enum class Cell : unsigned char { Zero, One, Star };

inline char cell_char(Cell c) {
  switch (c) {
    case Cell::Zero: return '0';
    case Cell::One: return '1';
    default: return '*';
  }
}

/// A matrix with entries from {0, 1, *}. Total matrices are the *-free
/// special case. Immutable in spirit: mutation is only used while building.
class PartialMatrix {
 public:
  PartialMatrix() = default;
  PartialMatrix(std::size_t n_rows, std::size_t n_cols, Cell fill = Cell::Zero)
      : rows_(n_rows), cols_(n_cols), cells_(n_rows * n_cols, fill) {
    if (n_rows == 0 || n_cols == 0)
      throw PreconditionError("matrix dimensions must be positive");
  }

  static PartialMatrix identity(std::size_t n) {
    PartialMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Cell::One);
    return m;
  }
  static PartialMatrix ones(std::size_t n_rows, std::size_t n_cols) {
    return PartialMatrix(n_rows, n_cols, Cell::One);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Cell at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Cell v) { cells_[r * cols_ + c] = v; }

  bool total() const {
    return std::find(cells_.begin(), cells_.end(), Cell::Star) == cells_.end();
  }
  std::size_t count(Cell v) const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), v));
  }
  std::size_t one_count() const { return count(Cell::One); }

  /// Column pattern of the given row restricted to the requested value.
  Bitset row_mask(std::size_t r, Cell v) const {
    Bitset b(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) == v) b.set(c);
    return b;
  }
  Bitset col_mask(std::size_t c, Cell v) const {
    Bitset b(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      if (at(r, c) == v) b.set(r);
    return b;
  }

  PartialMatrix transposed() const {
    PartialMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
  }

  bool operator==(const PartialMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cell> cells_;
};

/// Text format: one row per line over the alphabet {0,1,*}; '#' starts a
/// comment line; blank lines and a missing trailing newline are tolerated on
/// input. format_matrix always emits a trailing newline and no comments.
inline PartialMatrix parse_matrix(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> data_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') data_lines.emplace_back(line_no, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (data_lines.empty()) throw ParseError("empty matrix");
  const std::size_t width = data_lines.front().second.size();
  PartialMatrix m(data_lines.size(), width);
  for (std::size_t r = 0; r < data_lines.size(); ++r) {
    auto [no, line] = data_lines[r];
    if (line.size() != width)
      throw ParseError("row has " + std::to_string(line.size()) +
                           " entries, expected " + std::to_string(width),
                       no);
    for (std::size_t c = 0; c < width; ++c) {
      switch (line[c]) {
        case '0': m.set(r, c, Cell::Zero); break;
        case '1': m.set(r, c, Cell::One); break;
        case '*': m.set(r, c, Cell::Star); break;
        default:
          throw ParseError(std::string("illegal character '") + line[c] + "'", no);
      }
    }
  }
  return m;
}

inline std::string format_matrix(const PartialMatrix& m) {
  std::string out;
  out.reserve(m.rows() * (m.cols() + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += cell_char(m.at(r, c));
    out += '\n';
  }
  return out;
}

/// Kronecker tensor product of two total matrices: block (i,j) of the result
/// is M[i,j] * N, so an entry is One iff both factors are One.
inline PartialMatrix tensor(const PartialMatrix& m, const PartialMatrix& n) {
  if (!m.total() || !n.total())
    throw UnsupportedError("tensor product is defined for total matrices only");
  if (m.rows() * n.rows() > (1u << 20) || m.cols() * n.cols() > (1u << 20))
    throw PreconditionError("tensor product result too large");
  PartialMatrix out(m.rows() * n.rows(), m.cols() * n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) != Cell::One) continue;
      for (std::size_t a = 0; a < n.rows(); ++a)
        for (std::size_t b = 0; b < n.cols(); ++b)
          out.set(i * n.rows() + a, j * n.cols() + b, n.at(a, b));
    }
  return out;
}

inline PartialMatrix tensor_power(const PartialMatrix& m, std::size_t k) {
  if (k == 0) throw PreconditionError("tensor power requires k >= 1");
  PartialMatrix out = m;
  for (std::size_t i = 1; i < k; ++i) out = tensor(out, m);
  return out;
}

/// dedup removes duplicate rows, then duplicate columns. The mappings send
/// each original index to its surviving representative, so
/// M[i][j] == result.matrix[row_map[i]][col_map[j]].
struct DedupResult {
  PartialMatrix matrix;
  std::vector<std::size_t> row_map;
  std::vector<std::size_t> col_map;
};

inline DedupResult dedup(const PartialMatrix& m) {
  std::vector<std::size_t> keep_rows;
  std::vector<std::size_t> row_map(m.rows());
  std::map<std::string, std::size_t> seen_rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string key(m.cols(), ' ');
    for (std::size_t c = 0; c < m.cols(); ++c) key[c] = cell_char(m.at(r, c));
    auto [it, inserted] = seen_rows.emplace(key, keep_rows.size());
    if (inserted) keep_rows.push_back(r);
    row_map[r] = it->second;
  }
  std::vector<std::size_t> keep_cols;
  std::vector<std::size_t> col_map(m.cols());
  std::map<std::string, std::size_t> seen_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::string key(keep_rows.size(), ' ');
    for (std::size_t i = 0; i < keep_rows.size(); ++i)
      key[i] = cell_char(m.at(keep_rows[i], c));
    auto [it, inserted] = seen_cols.emplace(key, keep_cols.size());
    if (inserted) keep_cols.push_back(c);
    col_map[c] = it->second;
  }
  PartialMatrix out(keep_rows.size(), keep_cols.size());
  for (std::size_t i = 0; i < keep_rows.size(); ++i)
    for (std::size_t j = 0; j < keep_cols.size(); ++j)
      out.set(i, j, m.at(keep_rows[i], keep_cols[j]));
  return {std::move(out), std::move(row_map), std::move(col_map)};
}

/// Dense matrix of exact rationals; houses completions and products UV.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t n_rows, std::size_t n_cols)
      : rows_(n_rows), cols_(n_cols), cells_(n_rows * n_cols) {
    if (n_rows == 0 || n_cols == 0)
      throw PreconditionError("matrix dimensions must be positive");
  }

  static RationalMatrix from_partial(const PartialMatrix& m) {
    if (!m.total())
      throw UnsupportedError("cannot lift a matrix with * entries to rationals");
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.at(r, c) == Cell::One) out.at(r, c) = 1;
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return cells_[r * cols_ + c];
  }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> cells_;
};

/// A set of (row, col) positions inside a host grid. Backed by one bitset in
/// row-major order; used for supports, fibers and leftover computations.
class CellSet {
 public:
  CellSet() = default;
  CellSet(std::size_t n_rows, std::size_t n_cols)
      : rows_(n_rows), cols_(n_cols), bits_(n_rows * n_cols) {}

  std::size_t host_rows() const { return rows_; }
  std::size_t host_cols() const { return cols_; }

  void insert(std::size_t r, std::size_t c) { bits_.set(index(r, c)); }
  void erase(std::size_t r, std::size_t c) { bits_.reset(index(r, c)); }
  bool contains(std::size_t r, std::size_t c) const { return bits_.test(index(r, c)); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  CellSet& operator|=(const CellSet& o) { bits_ |= o.bits_; return *this; }
  CellSet& operator&=(const CellSet& o) { bits_ &= o.bits_; return *this; }
  CellSet& operator-=(const CellSet& o) { bits_ -= o.bits_; return *this; }
  bool operator==(const CellSet&) const = default;

  Bitset row_support() const {
    Bitset out(rows_);
    for (std::size_t i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i))
      out.set(i / cols_);
    return out;
  }
  Bitset col_support() const {
    Bitset out(cols_);
    for (std::size_t i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i))
      out.set(i % cols_);
    return out;
  }

  /// True iff the set equals row_support x col_support. The empty set counts
  /// as a (vacuous) rectangle.
  bool is_rectangle() const {
    if (bits_.none()) return true;
    return size() == row_support().count() * col_support().count();
  }

  std::vector<std::pair<std::size_t, std::size_t>> cells() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(size());
    for (std::size_t i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i))
      out.emplace_back(i / cols_, i % cols_);
    return out;
  }

 private:
  std::size_t index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw PreconditionError("cell out of bounds");
    return r * cols_ + c;
  }

  std::size_t rows_ = 0, cols_ = 0;
  Bitset bits_;
};

}  // namespace rankforge
