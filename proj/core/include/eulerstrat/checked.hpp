#pragma once

#include <cstdint>

#include "eulerstrat/errors.hpp"

namespace eulerstrat {

/// All coefficients and Euler characteristics are exact 64-bit integers.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// acc + a * b, both steps checked.
inline Int checked_fma(Int acc, Int a, Int b) { return checked_add(acc, checked_mul(a, b)); }

}  // namespace eulerstrat
