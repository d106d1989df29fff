#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrk {

/// Thrown when an input exceeds the documented desk-scale bounds
/// (n <= 8 and |lambda|+|mu| <= 40 for the alternating-sum formulas,
/// n <= 6 for the Steinberg double sum, n <= 3 and maxdeg <= 8 for the
/// Cauchy check) or when an accumulation would overflow 64-bit signed
/// arithmetic.
class bounds_error : public std::runtime_error {
 public:
  explicit bounds_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw bounds_error("64-bit overflow: input exceeds documented bounds");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw bounds_error("64-bit overflow: input exceeds documented bounds");
  return r;
}

}  // namespace lrk
