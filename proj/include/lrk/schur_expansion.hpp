#pragma once

#include <cstdint>
#include <map>

#include "lrk/common.hpp"
#include "lrk/partition.hpp"

namespace lrk {

/// Signed integer combination of Schur-basis elements, keyed by
/// partition. Zero coefficients are never stored.
class schur_expansion {
 public:
  using term_map = std::map<partition, std::int64_t>;

  void add(const partition& p, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, std::int64_t{0});
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  std::int64_t coeff(const partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  const term_map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const schur_expansion&, const schur_expansion&) = default;

 private:
  term_map terms_;
};

}  // namespace lrk
