#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrk/common.hpp"
#include "lrk/partition.hpp"

namespace lrk {

namespace detail {

struct wv_hash {
  std::size_t operator()(const weight_vector& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Positive roots e_i - e_j of A_{n-1}, lexicographic on (i, j). The
/// count is order-independent but a fixed order makes the memo key
/// (vector, first active root) well-defined.
inline std::vector<std::pair<std::size_t, std::size_t>> positive_roots(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> roots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) roots.emplace_back(i, j);
  return roots;
}

}  // namespace detail

/// Memo from (remaining vector, first active root) to count. Entries are
/// write-once: a key is only ever inserted with its final value, so
/// concurrent readers and writers agree. Results are identical with or
/// without a shared cache.
class kostant_cache {
 public:
  std::optional<std::int64_t> find(const weight_vector& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void store(const weight_vector& key, std::int64_t value) {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(key, value);
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<weight_vector, std::int64_t, detail::wv_hash> map_;
};

namespace detail {

class local_kostant_cache {
 public:
  std::optional<std::int64_t> find(const weight_vector& key) const {
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(const weight_vector& key, std::int64_t value) { map_.emplace(key, value); }

 private:
  std::unordered_map<weight_vector, std::int64_t, wv_hash> map_;
};

template <class Cache>
std::int64_t kostant_rec(const weight_vector& v, std::size_t root,
                         const std::vector<std::pair<std::size_t, std::size_t>>& roots,
                         Cache& cache) {
  bool all_zero = true;
  std::int64_t prefix = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) all_zero = false;
    prefix += v[k];
    if (prefix < 0) return 0;  // positive roots have non-negative prefix sums
  }
  if (all_zero) return 1;
  if (root == roots.size()) return 0;

  weight_vector key = v;
  key.push_back(static_cast<std::int64_t>(root));
  if (auto hit = cache.find(key)) return *hit;

  auto [i, j] = roots[root];
  // coefficient budget: c copies of e_i - e_j drain every prefix sum
  // over [i, j) by c, and those must stay non-negative
  std::int64_t cmax = 0;
  prefix = 0;
  for (std::size_t k = 0; k < j; ++k) {
    prefix += v[k];
    if (k >= i && (k == i || prefix < cmax)) cmax = prefix;
  }
  std::int64_t total = 0;
  weight_vector rest = v;
  for (std::int64_t c = 0; c <= cmax; ++c) {
    total = checked_add(total, kostant_rec(rest, root + 1, roots, cache));
    rest[i] -= 1;
    rest[j] += 1;
  }
  cache.store(key, total);
  return total;
}

template <class Cache>
std::int64_t kostant_dispatch(const weight_vector& v, Cache& cache) {
  if (v.empty()) return 1;
  if (vec_sum(v) != 0) return 0;  // every positive root sums to zero
  auto roots = positive_roots(v.size());
  return kostant_rec(v, 0, roots, cache);
}

}  // namespace detail

/// Number of ways to write v as a non-negative integer combination of
/// the positive roots e_i - e_j (i < j); 0 when the entries do not sum
/// to zero or no decomposition exists. Memoized per call.
inline std::int64_t kostant_partition(const weight_vector& v) {
  detail::local_kostant_cache cache;
  return detail::kostant_dispatch(v, cache);
}

/// Same count backed by an externally shared write-once cache.
inline std::int64_t kostant_partition(const weight_vector& v, kostant_cache& cache) {
  return detail::kostant_dispatch(v, cache);
}

}  // namespace lrk
