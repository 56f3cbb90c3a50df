#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperfield/cone_subset.hpp"
#include "hyperfield/hyperstructure.hpp"

namespace hyperfield {

// Subset of the signed carrier -P u {0} u P. Kept as the triple
// (negatives, zero, positives); bit i of a mask refers to exponent i.
struct SignedSubset {
  Mask negatives = 0;
  bool zero = false;
  Mask positives = 0;

  friend bool operator==(const SignedSubset&, const SignedSubset&) = default;

  bool empty() const { return !zero && negatives == 0 && positives == 0; }

  int count() const {
    return std::popcount(negatives) + std::popcount(positives) + (zero ? 1 : 0);
  }

  SignedSubset& operator|=(const SignedSubset& o) {
    negatives |= o.negatives;
    zero = zero || o.zero;
    positives |= o.positives;
    return *this;
  }
};

// Carrier elements are indexed 0..2N in display order:
//   index 0..N-1  ->  -a^{N-1-index}   (so index 0 is -a^{N-1}, index N-1 is -1)
//   index N       ->  0
//   index N+1..2N ->  a^{index-N-1}
namespace carrier {

inline int size(int order) { return 2 * order + 1; }
inline int zero_index(int order) { return order; }
inline int positive_index(int order, int exponent) { return order + 1 + exponent; }
inline int negative_index(int order, int exponent) { return order - 1 - exponent; }
inline bool is_zero(int order, int idx) { return idx == order; }
inline bool is_positive(int order, int idx) { return idx > order; }
inline int exponent(int order, int idx) {
  return is_positive(order, idx) ? idx - order - 1 : order - 1 - idx;
}
// Additive inverse: reflection through the middle column.
inline int mirror(int order, int idx) { return 2 * order - idx; }

inline int multiply(int order, int x, int y) {
  if (is_zero(order, x) || is_zero(order, y)) return zero_index(order);
  const int e = (exponent(order, x) + exponent(order, y)) % order;
  const bool positive = is_positive(order, x) == is_positive(order, y);
  return positive ? positive_index(order, e) : negative_index(order, e);
}

inline bool contains(const SignedSubset& s, int order, int idx) {
  if (is_zero(order, idx)) return s.zero;
  const Mask bit = Mask{1} << exponent(order, idx);
  return is_positive(order, idx) ? (s.positives & bit) != 0
                                 : (s.negatives & bit) != 0;
}

inline void insert(SignedSubset& s, int order, int idx) {
  if (is_zero(order, idx)) {
    s.zero = true;
  } else if (is_positive(order, idx)) {
    s.positives |= Mask{1} << exponent(order, idx);
  } else {
    s.negatives |= Mask{1} << exponent(order, idx);
  }
}

inline SignedSubset singleton(int order, int idx) {
  SignedSubset s;
  insert(s, order, idx);
  return s;
}

// Elementwise product of a carrier element with a subset.
inline SignedSubset multiply_subset(int order, int x, const SignedSubset& s) {
  if (is_zero(order, x)) return s.empty() ? SignedSubset{} : singleton(order, zero_index(order));
  const int e = exponent(order, x);
  SignedSubset out;
  out.zero = s.zero;
  Mask pos = shift(order, e, s.positives);
  Mask neg = shift(order, e, s.negatives);
  if (is_positive(order, x)) {
    out.positives = pos;
    out.negatives = neg;
  } else {
    out.positives = neg;
    out.negatives = pos;
  }
  return out;
}

}  // namespace carrier

// The sets 1 - a^k for k = 0..N-1, straight from the membership rules that
// define them:
//   -a^m in 1 - a^k  <=>  a^k in 1 + a^m
//    0   in 1 - a^k  <=>  k = 0
//    a^m in 1 - a^k  <=>  a^{-k} in 1 + a^{m-k}
inline std::vector<SignedSubset> negative_generators(const Hyperstructure& h) {
  const int n = h.order();
  std::vector<SignedSubset> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    SignedSubset& s = out[static_cast<std::size_t>(k)];
    s.zero = (k == 0);
    const int inv = (n - k) % n;
    for (int m = 0; m < n; ++m) {
      if (h.generator(m) >> k & 1) s.negatives |= Mask{1} << m;
      const int d = (m - k + n) % n;
      if (h.generator(d) >> inv & 1) s.positives |= Mask{1} << m;
    }
  }
  return out;
}

// Full (2N+1) x (2N+1) hyperaddition table over the signed carrier.
class FullModel {
 public:
  explicit FullModel(int order)
      : order_((require_order(order), order)),
        cells_(static_cast<std::size_t>(carrier::size(order)) *
               static_cast<std::size_t>(carrier::size(order))) {}

  int order() const { return order_; }
  int carrier_size() const { return carrier::size(order_); }

  SignedSubset& cell(int row, int col) {
    return cells_[static_cast<std::size_t>(row) *
                      static_cast<std::size_t>(carrier_size()) +
                  static_cast<std::size_t>(col)];
  }
  const SignedSubset& cell(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) *
                      static_cast<std::size_t>(carrier_size()) +
                  static_cast<std::size_t>(col)];
  }

 private:
  int order_;
  std::vector<SignedSubset> cells_;
};

// Fills the table block by block: zero row/column as singletons, positive
// block from the cone sums, negative block by negating the mirrored positive
// block, mixed blocks from the signed differences (zero entering exactly at
// x + (-x)), then the lower triangle by symmetry.
inline FullModel build_table(const Hyperstructure& h) {
  const int n = h.order();
  FullModel m(n);

  m.cell(n, n) = carrier::singleton(n, n);
  for (int i = 0; i < n; ++i) {
    m.cell(i, n) = carrier::singleton(n, i);
    m.cell(n, n + 1 + i) = carrier::singleton(n, n + 1 + i);
  }

  for (int k = n + 1; k <= 2 * n; ++k) {
    for (int l = k; l <= 2 * n; ++l) {
      m.cell(k, l) = SignedSubset{0, false, h.sum(k - n - 1, l - n - 1)};
    }
  }

  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      const SignedSubset& p = m.cell(2 * n - l, 2 * n - k);
      m.cell(k, l) = SignedSubset{p.positives, p.zero, p.negatives};
    }
  }

  for (int k = 0; k < n; ++k) {
    for (int l = n + 1; l <= 2 * n; ++l) {
      const int t = l - n - 1;  // column exponent
      const int s = n - 1 - k;  // row exponent (negated element)
      m.cell(k, l) = SignedSubset{h.diff_negative(t, s), k + l == 2 * n,
                                  h.diff_positive(t, s)};
    }
  }

  for (int l = 0; l < carrier::size(n); ++l) {
    for (int k = l + 1; k < carrier::size(n); ++k) {
      m.cell(k, l) = m.cell(l, k);
    }
  }
  return m;
}

struct OracleVerdict {
  bool pass = true;
  std::string check;                      // name of the first failed check
  std::array<int, 3> witness{-1, -1, -1};  // carrier indices, -1 if unused
};

// Brute-force verification of the hyperfield axioms and the positive-cone
// closure on a materialized table. No reduction tricks on purpose: every
// ordered pair and triple of carrier elements is scanned, in a fixed
// lexicographic order so that failure witnesses are reproducible.
//
// Checks, in order: every entry nonempty; commutativity; zero row gives
// singletons; existence and uniqueness of the additive inverse (which must be
// the mirrored element); reversibility; associativity; distributivity;
// closure of P under hyperaddition. The carrier partition and the
// multiplicative closure of P hold by representation and are not rechecked.
inline OracleVerdict axiom_oracle(const FullModel& m) {
  const int n = m.order();
  const int sz = m.carrier_size();

  for (int x = 0; x < sz; ++x) {
    for (int y = 0; y < sz; ++y) {
      if (m.cell(x, y).empty()) return {false, "nonempty", {x, y, -1}};
    }
  }

  for (int x = 0; x < sz; ++x) {
    for (int y = 0; y < sz; ++y) {
      if (!(m.cell(x, y) == m.cell(y, x))) {
        return {false, "commutativity", {x, y, -1}};
      }
    }
  }

  const int zero = carrier::zero_index(n);
  for (int y = 0; y < sz; ++y) {
    if (!(m.cell(zero, y) == carrier::singleton(n, y))) {
      return {false, "zero-identity", {zero, y, -1}};
    }
  }

  for (int x = 0; x < sz; ++x) {
    int inverses = 0;
    bool mirrored = false;
    for (int y = 0; y < sz; ++y) {
      if (m.cell(x, y).zero) {
        ++inverses;
        mirrored = (y == carrier::mirror(n, x));
      }
    }
    if (inverses != 1 || !mirrored) return {false, "inverse", {x, -1, -1}};
  }

  for (int x = 0; x < sz; ++x) {
    for (int y = 0; y < sz; ++y) {
      const int neg_y = carrier::mirror(n, y);
      for (int z = 0; z < sz; ++z) {
        if (carrier::contains(m.cell(x, y), n, z) &&
            !carrier::contains(m.cell(neg_y, z), n, x)) {
          return {false, "reversibility", {x, y, z}};
        }
      }
    }
  }

  for (int x = 0; x < sz; ++x) {
    for (int y = 0; y < sz; ++y) {
      for (int z = 0; z < sz; ++z) {
        SignedSubset left, right;
        for (int w = 0; w < sz; ++w) {
          if (carrier::contains(m.cell(x, y), n, w)) left |= m.cell(w, z);
          if (carrier::contains(m.cell(y, z), n, w)) right |= m.cell(x, w);
        }
        if (!(left == right)) return {false, "associativity", {x, y, z}};
      }
    }
  }

  for (int z = 0; z < sz; ++z) {
    for (int x = 0; x < sz; ++x) {
      for (int y = 0; y < sz; ++y) {
        SignedSubset scaled;
        for (int w = 0; w < sz; ++w) {
          if (carrier::contains(m.cell(x, y), n, w)) {
            carrier::insert(scaled, n, carrier::multiply(n, z, w));
          }
        }
        const SignedSubset& direct =
            m.cell(carrier::multiply(n, z, x), carrier::multiply(n, z, y));
        if (!(scaled == direct)) return {false, "distributivity", {z, x, y}};
      }
    }
  }

  for (int x = n + 1; x < sz; ++x) {
    for (int y = n + 1; y < sz; ++y) {
      const SignedSubset& c = m.cell(x, y);
      if (c.zero || c.negatives != 0) return {false, "positive-closure", {x, y, -1}};
    }
  }

  return {};
}

}  // namespace hyperfield
