#pragma once

#include <string>

#include "pentagon/error.hpp"

namespace pentagon {

/// Exact path and walk counts. Every arithmetic step that could overflow goes
/// through checked_add / checked_mul.
using Count = unsigned __int128;

inline Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("128-bit counter overflow in addition");
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("128-bit counter overflow in multiplication");
  return out;
}

inline Count checked_sub(Count a, Count b) {
  if (b > a) throw OverflowError("negative count in subtraction");
  return a - b;
}

std::string to_string(Count value);

inline long double to_real(Count value) { return static_cast<long double>(value); }

}  // namespace pentagon
