#pragma once

#include <cstdint>
#include <stdexcept>

namespace stsig {

// Signature components and twist parameters are allowed up to ~1e9, so
// intermediate products can approach the int64 range. All signature
// arithmetic goes through these helpers; overflow throws instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in signature arithmetic");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in signature arithmetic");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in signature arithmetic");
  return out;
}

}  // namespace stsig
