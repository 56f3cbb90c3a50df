#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperfield {

// Subsets of the cyclic positive cone P = {1, a, ..., a^{N-1}} are stored as
// N-bit masks: bit i set <=> a^i belongs to the subset.
using Mask = std::uint64_t;

// Masks live in one 64-bit word so the cyclic shift below stays branch-free.
// Orders past 32 are far beyond exhaustive reach, so the cap costs nothing.
inline constexpr int max_order = 32;

inline void require_order(int order) {
  if (order < 1 || order > max_order) {
    throw std::invalid_argument("cone order must lie in [1, " +
                                std::to_string(max_order) + "], got " +
                                std::to_string(order));
  }
}

// Mask of the full cone {1, a, ..., a^{N-1}}.
constexpr Mask cone_mask(int order) { return (Mask{1} << order) - 1; }

// Subset {a^{i_1}, ..., a^{i_l}} -> sum of 2^{i_j}.
inline Mask encode(int order, const std::vector<int>& exponents) {
  require_order(order);
  Mask bits = 0;
  for (int e : exponents) {
    if (e < 0 || e >= order) {
      throw std::out_of_range("exponent " + std::to_string(e) +
                              " outside [0, " + std::to_string(order) + ")");
    }
    bits |= Mask{1} << e;
  }
  return bits;
}

// Inverse of encode: the exponents of the set bits, ascending.
inline std::vector<int> decode(int order, Mask bits) {
  require_order(order);
  if (bits > cone_mask(order)) {
    throw std::out_of_range("subset code " + std::to_string(bits) +
                            " has bits beyond order " + std::to_string(order));
  }
  std::vector<int> exponents;
  for (Mask m = bits; m != 0; m &= m - 1) {
    exponents.push_back(std::countr_zero(m));
  }
  return exponents;
}

// Cyclic rotation {a^i} -> {a^{(i+k) mod N}}, i.e. multiplication of the
// subset by a^k. Callers must keep bits below 2^order.
constexpr Mask shift(int order, int k, Mask bits) {
  k %= order;
  if (k < 0) k += order;
  if (k == 0) return bits;
  return ((bits << k) | (bits >> (order - k))) & cone_mask(order);
}

}  // namespace hyperfield
