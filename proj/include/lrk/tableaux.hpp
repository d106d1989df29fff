#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrk/common.hpp"
#include "lrk/kostant.hpp"
#include "lrk/partition.hpp"

namespace lrk {

/// Outer/inner shape pair with inner contained in outer componentwise.
struct skew_shape {
  partition outer;
  partition inner;

  skew_shape(partition out, partition in)
      : outer(std::move(out)), inner(std::move(in)) {
    for (std::size_t i = 0; i < inner.num_parts(); ++i)
      if (inner.part(i) > outer.part(i))
        throw std::invalid_argument("inner shape not contained in outer shape");
  }

  std::int64_t size() const { return outer.content() - inner.content(); }
};

/// Row-major filling of a (skew) shape; row r stores entries for the
/// boxes in columns [inner_r, outer_r).
class tableau {
 public:
  tableau(partition outer, partition inner, std::vector<std::vector<int>> rows)
      : shape_(std::move(outer), std::move(inner)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.outer.num_parts())
      throw std::invalid_argument("tableau row count does not match shape");
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (static_cast<std::int64_t>(rows_[r].size()) !=
          shape_.outer.part(r) - shape_.inner.part(r))
        throw std::invalid_argument("tableau row length does not match shape");
  }

  tableau(partition outer, std::vector<std::vector<int>> rows)
      : tableau(std::move(outer), partition{}, std::move(rows)) {}

  const partition& outer() const { return shape_.outer; }
  const partition& inner() const { return shape_.inner; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Entry at (row, col) in absolute coordinates; boxes only.
  int at(std::size_t r, std::int64_t c) const {
    return rows_[r][static_cast<std::size_t>(c - shape_.inner.part(r))];
  }

  bool has_box(std::size_t r, std::int64_t c) const {
    return r < rows_.size() && c >= shape_.inner.part(r) && c < shape_.outer.part(r);
  }

  /// Rows weakly increasing, columns strictly increasing, entries >= 1.
  bool is_semistandard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::int64_t c = shape_.inner.part(r); c < shape_.outer.part(r); ++c) {
        int e = at(r, c);
        if (e < 1) return false;
        if (c > shape_.inner.part(r) && at(r, c - 1) > e) return false;
        if (r > 0 && has_box(r - 1, c) && at(r - 1, c) >= e) return false;
      }
    }
    return true;
  }

  /// Letter multiplicities; index i counts the entries equal to i+1.
  weight_vector content(std::size_t min_letters = 0) const {
    weight_vector counts(min_letters, 0);
    for (const auto& row : rows_)
      for (int e : row) {
        if (counts.size() < static_cast<std::size_t>(e)) counts.resize(e, 0);
        ++counts[e - 1];
      }
    return counts;
  }

 private:
  skew_shape shape_;
  std::vector<std::vector<int>> rows_;
};

namespace detail {

template <class F>
void ssyt_fixed_rec(const weight_vector& shape, std::vector<std::vector<int>>& grid,
                    weight_vector& remaining, std::size_t r, std::size_t c, F&& emit) {
  if (r == shape.size()) {
    emit(grid);
    return;
  }
  if (c == static_cast<std::size_t>(shape[r])) {
    ssyt_fixed_rec(shape, grid, remaining, r + 1, 0, emit);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, grid[r][c - 1]);
  if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
  for (int e = lo; e <= static_cast<int>(remaining.size()); ++e) {
    if (remaining[e - 1] == 0) continue;
    --remaining[e - 1];
    grid[r][c] = e;
    ssyt_fixed_rec(shape, grid, remaining, r, c + 1, emit);
    ++remaining[e - 1];
  }
}

template <class F>
void ssyt_bounded_rec(const weight_vector& shape, std::vector<std::vector<int>>& grid,
                      weight_vector& counts, std::size_t r, std::size_t c, F&& emit) {
  if (r == shape.size()) {
    emit(counts);
    return;
  }
  if (c == static_cast<std::size_t>(shape[r])) {
    ssyt_bounded_rec(shape, grid, counts, r + 1, 0, emit);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, grid[r][c - 1]);
  if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
  for (int e = lo; e <= static_cast<int>(counts.size()); ++e) {
    ++counts[e - 1];
    grid[r][c] = e;
    ssyt_bounded_rec(shape, grid, counts, r, c + 1, emit);
    --counts[e - 1];
  }
}

}  // namespace detail

/// Visit every SSYT of the given straight shape and exact content;
/// emit(rows) receives the row-major grid.
template <class F>
void for_each_ssyt(const partition& shape, const weight_vector& content, F&& emit) {
  for (std::int64_t c : content)
    if (c < 0) return;
  if (vec_sum(content) != shape.content()) return;
  weight_vector rows = shape.parts();
  std::vector<std::vector<int>> grid(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) grid[r].resize(rows[r]);
  weight_vector remaining = content;
  detail::ssyt_fixed_rec(rows, grid, remaining, 0, 0, emit);
}

/// Visit every SSYT of the given straight shape with entries at most
/// max_entry; emit(content) receives the letter multiplicities.
template <class F>
void for_each_ssyt_content(const partition& shape, std::size_t max_entry, F&& emit) {
  if (shape.num_parts() > max_entry) return;  // columns exceed the alphabet
  weight_vector rows = shape.parts();
  std::vector<std::vector<int>> grid(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) grid[r].resize(rows[r]);
  weight_vector counts(max_entry, 0);
  detail::ssyt_bounded_rec(rows, grid, counts, 0, 0, emit);
}

/// Kostka number: the number of SSYT of the given shape whose content is
/// the given multiplicity vector. 0 when |content| != |shape| or the
/// content has a negative entry.
inline std::int64_t kostka_ssyt(const partition& shape, const weight_vector& content) {
  std::int64_t count = 0;
  for_each_ssyt(shape, content, [&](const auto&) { ++count; });
  return count;
}

inline std::int64_t kostka_ssyt(const partition& shape, const partition& content) {
  return kostka_ssyt(shape, content.parts());
}

/// Full tableau list for the same count; kept behind a separate entry
/// point so the counting paths never materialize fillings.
inline std::vector<tableau> ssyt_list(const partition& shape, const weight_vector& content) {
  std::vector<tableau> out;
  for_each_ssyt(shape, content,
                [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(shape, rows); });
  return out;
}

/// Number of SSYT of the shape with entries <= max_entry: the dimension
/// of the corresponding GL(max_entry) representation.
inline std::int64_t ssyt_count_bounded(const partition& shape, std::size_t max_entry) {
  std::int64_t count = 0;
  for_each_ssyt_content(shape, max_entry, [&](const auto&) { ++count; });
  return count;
}

namespace detail {

struct construct_result {
  std::vector<std::vector<int>> grid;
  std::vector<weight_vector> residuals;  // shape left after each letter, largest first
};

/// Place `count` copies of `letter` into the empty region described by
/// per-row prefix lengths `shape`, bottom row first, right to left. A row
/// only accepts boxes that have no empty or same-letter box below, i.e.
/// columns in [previous length of the row below, own length).
inline void place_largest_letter(weight_vector& shape, std::vector<std::vector<int>>& grid,
                                 int letter, std::int64_t count) {
  std::int64_t below_before = 0;
  for (std::size_t r = shape.size(); r-- > 0;) {
    std::int64_t capacity = shape[r] - below_before;
    std::int64_t take = std::min(count, capacity);
    for (std::int64_t c = shape[r] - take; c < shape[r]; ++c)
      grid[r][static_cast<std::size_t>(c)] = letter;
    below_before = shape[r];
    shape[r] -= take;
    count -= take;
    if (count == 0) return;
  }
  if (count != 0) throw std::logic_error("construct_ssyt: letters left over");
}

inline construct_result construct_impl(const partition& mu, const partition& xi) {
  if (!is_dominated(xi, mu))
    throw std::invalid_argument("construct_ssyt requires xi dominated by mu");
  construct_result res;
  weight_vector shape = mu.parts();
  res.grid.resize(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) res.grid[r].resize(shape[r], 0);
  for (std::size_t k = xi.num_parts(); k-- > 0;) {
    place_largest_letter(shape, res.grid, static_cast<int>(k + 1), xi.part(k));
    res.residuals.push_back(shape);
  }
  for (std::int64_t len : shape)
    if (len != 0) throw std::logic_error("construct_ssyt: unfilled boxes remain");
  return res;
}

}  // namespace detail

/// SSYT of shape mu and content xi built by the recursive bottom-up
/// filling: all copies of the largest letter first, then the next, each
/// placed right to left from the bottom row. Requires xi ⊴ mu.
inline tableau construct_ssyt(const partition& mu, const partition& xi) {
  return tableau(mu, detail::construct_impl(mu, xi).grid);
}

/// The intermediate unfilled shapes of the same construction, one entry
/// per letter (largest letter first), each of length mu.num_parts().
inline std::vector<weight_vector> construct_ssyt_residuals(const partition& mu,
                                                           const partition& xi) {
  return detail::construct_impl(mu, xi).residuals;
}

namespace detail {

struct lr_enum_state {
  weight_vector out, in;  // outer/inner row lengths, padded to the row count
  weight_vector quota;    // content multiplicities
  std::vector<std::vector<int>> grid;
  weight_vector used;
  weight_vector word;  // running letter counts of the reverse reading word
  std::int64_t count = 0;

  void fill(std::size_t r, std::int64_t c) {
    if (r == out.size()) {
      ++count;
      return;
    }
    if (c < in[r]) {
      fill(r + 1, r + 1 < out.size() ? out[r + 1] - 1 : 0);
      return;
    }
    for (std::size_t e = 1; e <= quota.size(); ++e) {
      if (used[e - 1] == quota[e - 1]) continue;
      if (c + 1 < out[r] && static_cast<int>(e) > grid[r][c + 1]) continue;
      if (r > 0 && c >= in[r - 1] && static_cast<int>(e) <= grid[r - 1][c]) continue;
      // lattice word: every prefix of the reverse reading word holds at
      // least as many (e-1)'s as e's
      if (e > 1 && word[e - 2] < word[e - 1] + 1) continue;
      ++used[e - 1];
      ++word[e - 1];
      grid[r][c] = static_cast<int>(e);
      fill(r, c - 1);
      grid[r][c] = 0;
      --word[e - 1];
      --used[e - 1];
    }
  }
};

}  // namespace detail

/// Littlewood-Richardson coefficient c_{inner,content}^{outer}, counted
/// by the classical rule: skew SSYT of shape outer/inner with the given
/// content whose reverse reading word (right to left, top to bottom) is
/// a lattice word. 0 when inner is not contained in outer or the box
/// counts do not balance.
inline std::int64_t lr_rule_count(const partition& outer, const partition& inner,
                                  const partition& content) {
  if (outer.content() != inner.content() + content.content()) return 0;
  for (std::size_t i = 0; i < inner.num_parts(); ++i)
    if (inner.part(i) > outer.part(i)) return 0;
  detail::lr_enum_state st;
  std::size_t rows = outer.num_parts();
  st.out = outer.padded(rows);
  st.in = inner.padded(rows);
  st.quota = content.parts();
  st.used.assign(st.quota.size(), 0);
  st.word.assign(st.quota.size(), 0);
  st.grid.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) st.grid[r].resize(st.out[r], 0);
  if (rows == 0) return 1;  // empty skew shape, empty filling
  st.fill(0, st.out[0] - 1);
  return st.count;
}

namespace detail {

template <class PartitionFn>
std::int64_t kostka_kostant_impl(const partition& shape, const weight_vector& content,
                                 std::size_t n, PartitionFn&& pf) {
  if (n < 1 || n > 8)
    throw bounds_error("kostka_kostant: documented bound is 1 <= n <= 8");
  if (shape.num_parts() > n)
    throw std::invalid_argument("kostka_kostant: shape has more than n parts");
  if (content.size() > n)
    throw std::invalid_argument("kostka_kostant: content longer than n");
  weight_vector rho = staircase(n);
  weight_vector shape_rho = vec_add(shape.padded(n), rho);
  weight_vector padded_content = content;
  padded_content.resize(n, 0);
  weight_vector content_rho = vec_add(padded_content, rho);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::int64_t total = 0;
  weight_vector v(n);
  do {
    int sign = permutation_sign(idx);
    for (std::size_t i = 0; i < n; ++i) v[i] = shape_rho[idx[i]] - content_rho[i];
    total = checked_add(total, checked_mul(sign, pf(v)));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

}  // namespace detail

/// Kostka number as the alternating sum of Kostant partition function
/// values over the Weyl group; agrees with kostka_ssyt on non-negative
/// contents and extends it to arbitrary integer weights.
inline std::int64_t kostka_kostant(const partition& shape, const weight_vector& content,
                                   std::size_t n) {
  detail::local_kostant_cache cache;
  return detail::kostka_kostant_impl(shape, content, n, [&](const weight_vector& v) {
    return detail::kostant_dispatch(v, cache);
  });
}

inline std::int64_t kostka_kostant(const partition& shape, const weight_vector& content,
                                   std::size_t n, kostant_cache& cache) {
  return detail::kostka_kostant_impl(shape, content, n, [&](const weight_vector& v) {
    return kostant_partition(v, cache);
  });
}

}  // namespace lrk
