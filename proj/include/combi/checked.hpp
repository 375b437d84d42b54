#pragma once

#include <cstdint>

#include "combi/error.hpp"

namespace combi {

using Count = std::int64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

inline Count checked_sub(Count a, Count b) {
  Count r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

// n! for n <= 20; larger n overflows int64.
inline Count checked_factorial(int n) {
  Count r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

}  // namespace combi
