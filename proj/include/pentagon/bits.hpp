#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace pentagon::bits {

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

/// Calls f(bit) for every bit set in a & b, ascending.
template <class F>
void for_each_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, F&& f) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    for (std::uint64_t x = a[w] & b[w]; x != 0; x &= x - 1) {
      f(static_cast<std::uint32_t>(w * 64 + std::countr_zero(x)));
    }
  }
}

inline bool test(std::span<const std::uint64_t> a, std::size_t i) { return (a[i >> 6] >> (i & 63)) & 1U; }

}  // namespace pentagon::bits
