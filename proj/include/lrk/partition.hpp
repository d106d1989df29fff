#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrk/common.hpp"

namespace lrk {

/// Integer tuple of fixed length; entries may be negative and unordered.
using weight_vector = std::vector<std::int64_t>;

inline std::int64_t vec_sum(const weight_vector& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

inline weight_vector vec_add(const weight_vector& a, const weight_vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  weight_vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline weight_vector vec_sub(const weight_vector& a, const weight_vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  weight_vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

/// Weakly decreasing tuple of non-negative integers. Trailing zeros are
/// stripped on construction; every operation that needs a fixed length
/// takes an explicit n and zero-pads via padded(n).
class partition {
 public:
  partition() = default;

  explicit partition(weight_vector parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0)
        throw std::invalid_argument("partition parts must be non-negative");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  partition(std::initializer_list<std::int64_t> parts)
      : partition(weight_vector(parts)) {}

  /// Comma-separated non-negative integers, e.g. "5,3,2"; "" is the
  /// empty partition.
  static partition parse(const std::string& text) {
    if (text.empty()) return partition{};
    weight_vector parts;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed partition: '" + text + "'");
      parts.push_back(std::stoll(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return partition(std::move(parts));
  }

  const weight_vector& parts() const { return parts_; }
  std::size_t num_parts() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// i-th part, 0-indexed; 0 beyond the stored parts.
  std::int64_t part(std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// |lambda|, the number of boxes.
  std::int64_t content() const { return vec_sum(parts_); }

  weight_vector padded(std::size_t n) const {
    if (n < parts_.size())
      throw std::invalid_argument("partition has more than n parts");
    weight_vector r = parts_;
    r.resize(n, 0);
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const partition&, const partition&) = default;
  friend auto operator<=>(const partition& a, const partition& b) {
    return std::lexicographical_compare_three_way(
        a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
  }

 private:
  weight_vector parts_;
};

/// Arbitrary integer list, e.g. "2,0,-2"; "" is the empty vector.
inline weight_vector parse_int_list(const std::string& text) {
  if (text.empty()) return {};
  weight_vector entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t digits = tok.find_first_not_of("0123456789", tok.starts_with("-") ? 1 : 0);
    if (tok.empty() || tok == "-" || digits != std::string::npos)
      throw std::invalid_argument("malformed integer list: '" + text + "'");
    entries.push_back(std::stoll(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return entries;
}

inline std::string to_csv(const weight_vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

/// xi is dominated by mu: |xi| = |mu| and every prefix sum of xi is at
/// most the corresponding prefix sum of mu. Total function; the inputs
/// are zero-padded to a common length.
inline bool is_dominated(const partition& xi, const partition& mu) {
  if (xi.content() != mu.content()) return false;
  std::size_t n = std::max(xi.num_parts(), mu.num_parts());
  std::int64_t pxi = 0, pmu = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pxi += xi.part(i);
    pmu += mu.part(i);
    if (pxi > pmu) return false;
  }
  return true;
}

namespace detail {

template <class F>
void descend_partitions(weight_vector& prefix, std::int64_t remaining,
                        std::int64_t max_part, std::size_t slots, F&& emit) {
  if (remaining == 0) {
    emit(prefix);
    return;
  }
  if (slots == 0) return;
  std::int64_t lo = (remaining + static_cast<std::int64_t>(slots) - 1) /
                    static_cast<std::int64_t>(slots);
  for (std::int64_t v = std::min(max_part, remaining); v >= lo; --v) {
    prefix.push_back(v);
    descend_partitions(prefix, remaining - v, v, slots - 1, emit);
    prefix.pop_back();
  }
}

template <class F>
void descend_dominated(weight_vector& prefix, const partition& mu,
                       std::int64_t placed, std::int64_t max_part,
                       std::size_t slot, std::size_t n, F&& emit) {
  std::int64_t total = mu.content();
  if (placed == total) {
    emit(prefix);
    return;
  }
  if (slot == n) return;
  std::int64_t remaining = total - placed;
  std::int64_t slots_left = static_cast<std::int64_t>(n - slot);
  std::int64_t lo = (remaining + slots_left - 1) / slots_left;
  // prefix-sum budget: psi_1+...+psi_{slot+1} <= mu_1+...+mu_{slot+1}
  std::int64_t budget = 0;
  for (std::size_t i = 0; i <= slot; ++i) budget += mu.part(i);
  std::int64_t hi = std::min({max_part, remaining, budget - placed});
  for (std::int64_t v = hi; v >= lo; --v) {
    prefix.push_back(v);
    descend_dominated(prefix, mu, placed + v, v, slot + 1, n, emit);
    prefix.pop_back();
  }
}

template <class F>
void compositions_rec(weight_vector& c, std::size_t slot, std::int64_t remaining, F&& emit) {
  if (slot + 1 == c.size()) {
    c[slot] = remaining;
    emit(std::as_const(c));
    return;
  }
  for (std::int64_t v = remaining; v >= 0; --v) {
    c[slot] = v;
    compositions_rec(c, slot + 1, remaining - v, emit);
  }
}

}  // namespace detail

/// Visit every ordered tuple of `slots` non-negative integers summing
/// to m.
template <class F>
void for_each_composition(std::int64_t m, std::size_t slots, F&& emit) {
  if (m < 0) return;
  if (slots == 0) {
    if (m == 0) emit(weight_vector{});
    return;
  }
  weight_vector c(slots, 0);
  detail::compositions_rec(c, 0, m, emit);
}

/// All partitions of m with at most max_parts parts, in descending
/// lexicographic order.
inline std::vector<partition> enumerate_partitions(std::int64_t m,
                                                   std::size_t max_parts) {
  if (m < 0) return {};
  std::vector<partition> out;
  weight_vector prefix;
  detail::descend_partitions(prefix, m, m, max_parts,
                             [&](const weight_vector& p) { out.emplace_back(p); });
  return out;
}

/// The partitions psi of |mu| with at most n parts satisfying psi ⊴ mu,
/// each exactly once, in descending lexicographic order. Recursive
/// descent over parts, pruned by the prefix-sum budget, without
/// materializing all partitions of |mu|.
inline std::vector<partition> enumerate_dominated(const partition& mu,
                                                  std::size_t n) {
  std::vector<partition> out;
  weight_vector prefix;
  detail::descend_dominated(prefix, mu, 0, mu.content(), 0, n,
                            [&](const weight_vector& p) { out.emplace_back(p); });
  return out;
}

/// rho = (n-1, n-2, ..., 1, 0), the integral normalization of the
/// half-sum of positive roots.
inline weight_vector staircase(std::size_t n) {
  if (n < 1) throw std::invalid_argument("staircase requires n >= 1");
  weight_vector r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::int64_t>(n - 1 - i);
  return r;
}

/// Parity of a permutation given in one-line form (image of 0..n-1).
inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

struct signed_sort {
  weight_vector sorted;  ///< strictly decreasing rearrangement
  int sign = 1;          ///< parity of the unique sorting permutation
  bool degenerate = false;  ///< input had a repeated entry
};

/// Strictly decreasing rearrangement of v together with the sign of the
/// unique permutation achieving it; flags repeated entries as degenerate
/// instead (those correspond to vanishing alternants).
inline signed_sort sort_with_sign(const weight_vector& v) {
  std::vector<std::size_t> idx(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  signed_sort out;
  out.sorted.resize(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out.sorted[i] = v[idx[i]];
  for (std::size_t i = 1; i < out.sorted.size(); ++i) {
    if (out.sorted[i - 1] == out.sorted[i]) {
      out.degenerate = true;
      return out;
    }
  }
  out.sign = permutation_sign(idx);
  return out;
}

/// Each distinct rearrangement of xi zero-padded to length n, exactly
/// once; the list has n!/|stabilizer| entries.
inline std::vector<weight_vector> distinct_rearrangements(const partition& xi,
                                                          std::size_t n) {
  weight_vector v = xi.padded(n);
  std::sort(v.begin(), v.end());
  std::vector<weight_vector> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace lrk
