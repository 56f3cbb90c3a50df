#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperfield/cone_subset.hpp"

namespace hyperfield {

// A multiplicative structure on H = -P u {0} u P with cyclic positive cone
// P = <a> of order N is pinned down by the generator sets 1 + a^l for
// l = 0..K, K = floor(N/2). Conventions used throughout:
//   - generator sets are nonempty subsets of P, stored as masks
//   - the defining tuple (s_0, ..., s_K) lists those masks as integers,
//     written H(s_0, ..., s_K)
//   - the remaining sets obey 1 + a^j = a^j * (1 + a^{N-j}) for j > K

struct GeneratorTuple {
  int order = 0;
  std::vector<std::uint32_t> codes;

  friend bool operator==(const GeneratorTuple&, const GeneratorTuple&) = default;
};

// K = floor(N/2); tuples carry K+1 codes.
constexpr int half_order(int order) { return order / 2; }

inline void require_tuple(int order, std::span<const std::uint32_t> codes) {
  require_order(order);
  const std::size_t want = static_cast<std::size_t>(half_order(order)) + 1;
  if (codes.size() != want) {
    throw std::invalid_argument("tuple for order " + std::to_string(order) +
                                " needs " + std::to_string(want) +
                                " entries, got " + std::to_string(codes.size()));
  }
  for (std::uint32_t c : codes) {
    if (c < 1 || c > cone_mask(order)) {
      throw std::invalid_argument("tuple entry " + std::to_string(c) +
                                  " outside [1, 2^" + std::to_string(order) +
                                  " - 1]");
    }
  }
}

// Which acceptance condition a candidate failed, if any. The two
// associativity families carry the witness pair (k, l).
enum class Condition {
  none,
  even_symmetry,        // rotation invariance of the middle set, even N only
  cover,                // the generator sets must jointly cover P
  sum_associativity,    // (1 + a^k) + a^l = (1 + a^l) + a^k
  mixed_associativity,  // ((1 + a^k) - a^l) and ((1 - a^l) + a^k) agree on P
};

inline const char* condition_name(Condition c) {
  switch (c) {
    case Condition::none: return "none";
    case Condition::even_symmetry: return "even-symmetry";
    case Condition::cover: return "cover";
    case Condition::sum_associativity: return "sum-associativity";
    case Condition::mixed_associativity: return "mixed-associativity";
  }
  return "unknown";
}

struct CheckResult {
  Condition failed = Condition::none;
  int k = -1;
  int l = -1;

  bool ok() const { return failed == Condition::none; }
};

class Hyperstructure {
 public:
  Hyperstructure(int order, std::span<const std::uint32_t> codes)
      : order_(order), half_(half_order(order)) {
    require_tuple(order, codes);
    for (int i = 0; i <= half_; ++i) gen_[i] = codes[static_cast<std::size_t>(i)];
    for (int j = half_ + 1; j < order_; ++j) {
      gen_[j] = shift(order_, j, gen_[order_ - j]);
    }
  }

  explicit Hyperstructure(const GeneratorTuple& t)
      : Hyperstructure(t.order, t.codes) {}

  // For even N = 2K the set 1 + a^K must be invariant under rotation by K;
  // tuples violating this cannot define a commutative hyperaddition and are
  // skipped before construction.
  static bool even_condition(int order, std::uint32_t middle_code) {
    if (order % 2 != 0) {
      throw std::logic_error("even_condition called with odd order");
    }
    const Mask m = middle_code;
    return shift(order, order / 2, m) == m;
  }

  int order() const { return order_; }
  int half() const { return half_; }

  // The set 1 + a^l as a mask.
  Mask generator(int l) const { return gen_[l]; }

  GeneratorTuple tuple() const {
    GeneratorTuple t;
    t.order = order_;
    t.codes.reserve(static_cast<std::size_t>(half_) + 1);
    for (int i = 0; i <= half_; ++i) {
      t.codes.push_back(static_cast<std::uint32_t>(gen_[i]));
    }
    return t;
  }

  // a^k + a^l = a^k * (1 + a^{l-k})
  Mask sum(int k, int l) const {
    return shift(order_, k, gen_[mod_diff(l, k)]);
  }

  // (a^m + a^k) + a^l
  Mask sum(int m, int k, int l) const {
    Mask acc = 0;
    for (Mask s = sum(m, k); s != 0; s &= s - 1) {
      acc |= sum(std::countr_zero(s), l);
    }
    return acc;
  }

  // Positive part of a^k - a^l: exponents i with a^k in a^i + a^l.
  Mask diff_positive(int k, int l) const {
    Mask acc = 0;
    for (int i = 0; i < order_; ++i) {
      if (sum(i, l) >> k & 1) acc |= Mask{1} << i;
    }
    return acc;
  }

  // Negative part of a^k - a^l: exponents i with a^l in a^i + a^k,
  // i.e. -a^i present in the difference.
  Mask diff_negative(int k, int l) const {
    Mask acc = 0;
    for (int i = 0; i < order_; ++i) {
      if (sum(i, k) >> l & 1) acc |= Mask{1} << i;
    }
    return acc;
  }

  // Positive part of (a^m + a^k) - a^l.
  Mask sum_minus_pos(int m, int k, int l) const {
    Mask acc = 0;
    for (Mask s = sum(m, k); s != 0; s &= s - 1) {
      acc |= diff_positive(std::countr_zero(s), l);
    }
    return acc;
  }

  // Positive part of (a^m - a^k) + a^l.
  Mask diff_plus_pos(int m, int k, int l) const {
    Mask acc = 0;
    for (Mask s = diff_positive(m, k); s != 0; s &= s - 1) {
      acc |= sum(std::countr_zero(s), l);
    }
    for (Mask s = diff_negative(m, k); s != 0; s &= s - 1) {
      acc |= diff_positive(l, std::countr_zero(s));
    }
    return acc;
  }

  // Full acceptance check. Cover first (cheapest), then both associativity
  // families over every ordered pair (k, l) with early exit; the pair loop is
  // deliberately not halved by symmetry. Uses per-candidate sum/difference
  // tables since this dominates enumeration throughput.
  CheckResult check() const {
    const int n = order_;
    Mask cover = 0;
    for (int i = 0; i < n; ++i) cover |= gen_[i];
    if (cover != cone_mask(n)) return {Condition::cover, -1, -1};

    // sum_tab[k][l] = a^k + a^l, diff_tab[k][l] = (a^k - a^l) marked over P
    Mask sum_tab[max_order][max_order];
    Mask diff_tab[max_order][max_order];
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        sum_tab[k][l] = shift(n, k, gen_[mod_diff(l, k)]);
        diff_tab[k][l] = 0;
      }
    }
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i < n; ++i) {
        for (Mask s = sum_tab[i][l]; s != 0; s &= s - 1) {
          diff_tab[std::countr_zero(s)][l] |= Mask{1} << i;
        }
      }
    }

    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        Mask lhs = 0, rhs = 0;
        for (Mask s = gen_[k]; s != 0; s &= s - 1) lhs |= sum_tab[std::countr_zero(s)][l];
        for (Mask s = gen_[l]; s != 0; s &= s - 1) rhs |= sum_tab[std::countr_zero(s)][k];
        if (lhs != rhs) return {Condition::sum_associativity, k, l};

        Mask ppm = 0, pmp = 0;
        for (Mask s = gen_[k]; s != 0; s &= s - 1) ppm |= diff_tab[std::countr_zero(s)][l];
        for (Mask s = diff_tab[0][l]; s != 0; s &= s - 1) pmp |= sum_tab[std::countr_zero(s)][k];
        for (Mask s = diff_tab[l][0]; s != 0; s &= s - 1) pmp |= diff_tab[k][std::countr_zero(s)];
        if (ppm != pmp) return {Condition::mixed_associativity, k, l};
      }
    }
    return {Condition::none, -1, -1};
  }

  bool is_hyperfield() const { return check().ok(); }

 private:
  int mod_diff(int l, int k) const { return l >= k ? l - k : l - k + order_; }

  int order_;
  int half_;
  std::array<Mask, max_order> gen_{};
};

}  // namespace hyperfield
