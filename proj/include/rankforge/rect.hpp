#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/matrix.hpp"

namespace rankforge {

/// A combinatorial rectangle: row-index set x column-index set inside a host
/// grid. Both sides are nonempty; the empty rectangle is represented by
/// absence. Stored as two bitsets so intersection tests are bitwise.
struct Rect {
  Bitset rows, cols;

  Rect() = default;
  Rect(Bitset r, Bitset c) : rows(std::move(r)), cols(std::move(c)) {
    if (rows.none() || cols.none())
      throw ConstructionError("rectangle sides must be nonempty");
  }
  Rect(std::size_t host_rows, std::size_t host_cols,
       const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx)
      : Rect(make_bits(host_rows, row_idx), make_bits(host_cols, col_idx)) {}

  bool contains(std::size_t r, std::size_t c) const {
    return rows.test(r) && cols.test(c);
  }
  std::size_t cell_count() const { return rows.count() * cols.count(); }

  /// True iff the two rectangles share no cell.
  bool disjoint(const Rect& o) const {
    return !rows.intersects(o.rows) || !cols.intersects(o.cols);
  }

  CellSet cell_set() const {
    CellSet s(rows.size(), cols.size());
    for (std::size_t r = rows.find_first(); r != Bitset::npos; r = rows.find_next(r))
      for (std::size_t c = cols.find_first(); c != Bitset::npos; c = cols.find_next(c))
        s.insert(r, c);
    return s;
  }

  bool operator==(const Rect&) const = default;

 private:
  static Bitset make_bits(std::size_t n, const std::vector<std::size_t>& idx) {
    Bitset b(n);
    for (std::size_t i : idx) {
      if (i >= n) throw PreconditionError("rectangle index out of bounds");
      b.set(i);
    }
    return b;
  }
};

namespace detail {
// Compare as the bit string b0 b1 ... b(n-1).
inline int bitset_cmp(const Bitset& a, const Bitset& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool x = a.test(i), y = b.test(i);
    if (x != y) return x ? 1 : -1;
  }
  return 0;
}
}  // namespace detail

/// Canonical rectangle order: (min row, min col, rows bit string, cols bit
/// string), lexicographically. Used wherever deterministic enumeration order
/// matters.
inline bool rect_less(const Rect& a, const Rect& b) {
  std::size_t ar = a.rows.find_first(), br = b.rows.find_first();
  if (ar != br) return ar < br;
  std::size_t ac = a.cols.find_first(), bc = b.cols.find_first();
  if (ac != bc) return ac < bc;
  int c = detail::bitset_cmp(a.rows, b.rows);
  if (c != 0) return c < 0;
  return detail::bitset_cmp(a.cols, b.cols) < 0;
}

namespace detail {
inline void check_rects_against_host(const PartialMatrix& host,
                                     const std::vector<Rect>& rects) {
  std::vector<Bitset> zero_cols;
  zero_cols.reserve(host.rows());
  for (std::size_t r = 0; r < host.rows(); ++r)
    zero_cols.push_back(host.row_mask(r, Cell::Zero));
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const Rect& rect = rects[i];
    if (rect.rows.size() != host.rows() || rect.cols.size() != host.cols())
      throw ConstructionError("rectangle " + std::to_string(i) + " does not fit host", i);
    for (std::size_t r = rect.rows.find_first(); r != Bitset::npos;
         r = rect.rows.find_next(r))
      if (rect.cols.intersects(zero_cols[r]))
        throw ConstructionError(
            "rectangle " + std::to_string(i) + " touches a 0 cell", i);
  }
}

// Coverage multiplicity of every cell, row-major.
inline std::vector<unsigned> coverage(const PartialMatrix& host,
                                      const std::vector<Rect>& rects) {
  std::vector<unsigned> cover(host.rows() * host.cols(), 0);
  for (const Rect& rect : rects)
    for (std::size_t r = rect.rows.find_first(); r != Bitset::npos;
         r = rect.rows.find_next(r))
      for (std::size_t c = rect.cols.find_first(); c != Bitset::npos;
           c = rect.cols.find_next(c))
        ++cover[r * host.cols() + c];
  return cover;
}
}  // namespace detail

/// Rectangles covering every One of the host at least once, none touching a
/// Zero. Validated at construction.
struct Cover {
  PartialMatrix host;
  std::vector<Rect> rects;

  Cover(PartialMatrix h, std::vector<Rect> r)
      : host(std::move(h)), rects(std::move(r)) {
    detail::check_rects_against_host(host, rects);
    auto cover = detail::coverage(host, rects);
    for (std::size_t r = 0; r < host.rows(); ++r)
      for (std::size_t c = 0; c < host.cols(); ++c)
        if (host.at(r, c) == Cell::One && cover[r * host.cols() + c] == 0)
          throw ConstructionError("uncovered 1 at (" + std::to_string(r) + "," +
                                  std::to_string(c) + ")");
  }
};

/// Rectangles covering every One of the host exactly once. On total hosts the
/// rectangles are pairwise disjoint; on partial hosts they may overlap on
/// Star cells only. Validated at construction. An empty list is a valid
/// partition of an all-Zero/Star host.
struct Partition {
  PartialMatrix host;
  std::vector<Rect> rects;

  Partition(PartialMatrix h, std::vector<Rect> r)
      : host(std::move(h)), rects(std::move(r)) {
    detail::check_rects_against_host(host, rects);
    auto cover = detail::coverage(host, rects);
    for (std::size_t rr = 0; rr < host.rows(); ++rr)
      for (std::size_t c = 0; c < host.cols(); ++c) {
        unsigned k = cover[rr * host.cols() + c];
        Cell v = host.at(rr, c);
        if (v == Cell::One && k != 1)
          throw ConstructionError("1 at (" + std::to_string(rr) + "," +
                                  std::to_string(c) + ") covered " +
                                  std::to_string(k) + " times");
        if (v == Cell::Star) continue;  // unconstrained multiplicity
      }
  }
};

/// All maximal rectangles avoiding the Zero cells of M and containing at
/// least one One, in canonical order. Every rectangle usable by any
/// partition or cover is a subrectangle of some listed one.
///
/// Maximal rectangles correspond to closed column sets: each is an
/// intersection of row supports, and the family of all such intersections is
/// built incrementally row by row.
inline std::vector<Rect> enumerate_candidate_rects(const PartialMatrix& m) {
  std::vector<Bitset> nonzero(m.rows()), ones(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Bitset z = m.row_mask(r, Cell::Zero);
    nonzero[r] = ~z;
    ones[r] = m.row_mask(r, Cell::One);
  }
  std::vector<Bitset> family;
  std::map<std::vector<Bitset::block_type>, bool> seen;
  auto add = [&](const Bitset& s) {
    if (s.none()) return;
    std::vector<Bitset::block_type> key(s.num_blocks());
    boost::to_block_range(s, key.begin());
    if (seen.emplace(std::move(key), true).second) family.push_back(s);
  };
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (nonzero[r].none()) continue;
    std::vector<Bitset> fresh;
    fresh.push_back(nonzero[r]);
    for (const Bitset& f : family) fresh.push_back(f & nonzero[r]);
    for (const Bitset& s : fresh) add(s);
  }

  std::vector<Rect> out;
  for (const Bitset& colset : family) {
    Bitset rowset(m.rows());
    bool has_one = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (colset.is_subset_of(nonzero[r])) {
        rowset.set(r);
        if (colset.intersects(ones[r])) has_one = true;
      }
    }
    if (rowset.none() || !has_one) continue;
    out.emplace_back(std::move(rowset), colset);
  }
  std::sort(out.begin(), out.end(), rect_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The pair (R, Q) is compatible iff Q \ R is a rectangle: R and Q disjoint,
/// or rows(R) superset of rows(Q), or cols(R) superset of cols(Q).
inline bool is_compatible(const Rect& r, const Rect& q) {
  if (r.rows.size() != q.rows.size() || r.cols.size() != q.cols.size())
    throw PreconditionError("rectangles live in different hosts");
  return r.disjoint(q) || q.rows.is_subset_of(r.rows) || q.cols.is_subset_of(r.cols);
}

struct LeftoverResult {
  CellSet cells;
  bool is_rectangle;
};

/// R_i minus the union of all other cover rectangles, and whether that set is
/// a (possibly empty) rectangle.
inline LeftoverResult leftover(std::size_t i, const Cover& cover) {
  if (i >= cover.rects.size()) throw PreconditionError("leftover index out of range");
  CellSet cells = cover.rects[i].cell_set();
  for (std::size_t j = 0; j < cover.rects.size(); ++j)
    if (j != i) cells -= cover.rects[j].cell_set();
  bool rect = cells.is_rectangle();
  return {std::move(cells), rect};
}

struct OrderedPart {
  std::size_t rect_index;
  CellSet cells;
  bool is_rectangle;
};

/// First cover-to-partition technique: with pi a permutation of the cover
/// indices, emit R_i minus the union of all R_j with pi(j) < pi(i). Empty
/// parts are dropped. The emitted sets always partition the union of the
/// cover (hence the Ones, on total hosts); the flags say which parts are
/// rectangles.
inline std::vector<OrderedPart> technique1(const Cover& cover,
                                           const std::vector<std::size_t>& pi) {
  const std::size_t r = cover.rects.size();
  if (pi.size() != r) throw PreconditionError("permutation size mismatch");
  std::vector<bool> hit(r, false);
  for (std::size_t v : pi) {
    if (v >= r || hit[v]) throw PreconditionError("not a permutation");
    hit[v] = true;
  }
  std::vector<OrderedPart> out;
  for (std::size_t i = 0; i < r; ++i) {
    CellSet cells = cover.rects[i].cell_set();
    for (std::size_t j = 0; j < r; ++j)
      if (pi[j] < pi[i]) cells -= cover.rects[j].cell_set();
    if (cells.empty()) continue;
    bool rect = cells.is_rectangle();
    out.push_back({i, std::move(cells), rect});
  }
  return out;
}

/// A row type with respect to a cover R_i = A_i x B_i: the set of rows lying
/// in exactly the A_i named by the signature. Nontrivial iff the signature is
/// not empty. All member rows of a valid cover's total host are identical.
struct RowType {
  Bitset signature;  // bit i set <=> members lie in A_i
  Bitset members;
  bool nontrivial() const { return signature.any(); }
};

enum class Axis { rows, cols };

inline std::vector<RowType> axis_types(const Cover& cover, Axis axis) {
  if (!cover.host.total())
    throw UnsupportedError("types are defined for total hosts only");
  const std::size_t n = axis == Axis::rows ? cover.host.rows() : cover.host.cols();
  const std::size_t r = cover.rects.size();
  std::map<std::vector<Bitset::block_type>, std::size_t> index;
  std::vector<RowType> out;
  for (std::size_t a = 0; a < n; ++a) {
    Bitset sig(r);
    for (std::size_t i = 0; i < r; ++i) {
      const Bitset& side = axis == Axis::rows ? cover.rects[i].rows : cover.rects[i].cols;
      if (side.test(a)) sig.set(i);
    }
    std::vector<Bitset::block_type> key(sig.num_blocks());
    boost::to_block_range(sig, key.begin());
    auto [it, inserted] = index.emplace(std::move(key), out.size());
    if (inserted) out.push_back({std::move(sig), Bitset(n)});
    out[it->second].members.set(a);
  }
  return out;
}

inline std::vector<RowType> row_types(const Cover& cover) {
  return axis_types(cover, Axis::rows);
}

/// Second technique: one rectangle per nontrivial nonempty type, spanning the
/// type's members and the Ones of their common line. Always a valid
/// partition, with exactly as many rectangles as nontrivial nonempty types.
inline Partition technique2(const Cover& cover, Axis axis) {
  auto types = axis_types(cover, axis);
  std::vector<Rect> rects;
  for (const RowType& t : types) {
    if (!t.nontrivial()) continue;
    std::size_t rep = t.members.find_first();
    if (axis == Axis::rows) {
      Bitset one_cols = cover.host.row_mask(rep, Cell::One);
      rects.emplace_back(t.members, std::move(one_cols));
    } else {
      Bitset one_rows = cover.host.col_mask(rep, Cell::One);
      rects.emplace_back(std::move(one_rows), t.members);
    }
  }
  return Partition(cover.host, std::move(rects));
}

/// Cover-to-partition via a bipartition of the intersection graph of the
/// cover: one side S (an independent set that is also a vertex cover) is kept
/// verbatim, every other rectangle is replaced by its leftover against S.
/// Tries both sides; empty leftovers are dropped; each emitted leftover must
/// be a rectangle, else construction fails naming the offending index.
inline Partition bipartite_partition(const Cover& cover) {
  if (!cover.host.total())
    throw UnsupportedError("bipartite_partition is defined for total hosts only");
  const std::size_t r = cover.rects.size();
  std::vector<std::vector<std::size_t>> adj(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (!cover.rects[i].disjoint(cover.rects[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<int> color(r, -1);
  for (std::size_t s = 0; s < r; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.back();
      queue.pop_back();
      for (std::size_t w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          throw PreconditionError("intersection graph is not bipartite");
        }
      }
    }
  }

  std::string failure;
  for (int side = 0; side <= 1; ++side) {
    std::vector<Rect> rects;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      if (color[i] == side) {
        rects.push_back(cover.rects[i]);
        continue;
      }
      CellSet cells = cover.rects[i].cell_set();
      for (std::size_t j = 0; j < r; ++j)
        if (color[j] == side) cells -= cover.rects[j].cell_set();
      if (cells.empty()) continue;
      if (!cells.is_rectangle()) {
        failure = "leftover of rectangle " + std::to_string(i) + " is not a rectangle";
        ok = false;
        break;
      }
      rects.emplace_back(cells.row_support(), cells.col_support());
    }
    if (!ok) continue;
    try {
      return Partition(cover.host, std::move(rects));
    } catch (const ConstructionError& e) {
      failure = e.what();
    }
  }
  throw ConstructionError(failure.empty() ? "no valid bipartition side" : failure);
}

}  // namespace rankforge
