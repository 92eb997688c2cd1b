#pragma once

#include <cstdint>
#include <vector>

namespace gk::oracle {

/// Table-based arithmetic for GF(p^f), q <= 64. Elements are indices
/// 0..q-1; a nonprime field uses the polynomial basis of the first monic
/// irreducible polynomial in the scan order, so indices are stable across
/// runs and data files.
struct GF {
  int p = 0, f = 0, q = 0;
  std::vector<uint8_t> add_t, sub_t, mul_t;  // q*q tables
  std::vector<uint8_t> inv_t, neg_t, frob_t; // frob: x -> x^p

  uint8_t add(uint8_t a, uint8_t b) const { return add_t[a * q + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return sub_t[a * q + b]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_t[a * q + b]; }
  uint8_t neg(uint8_t a) const { return neg_t[a]; }
  uint8_t inv(uint8_t a) const { return inv_t[a]; }
  uint8_t frob(uint8_t a) const { return frob_t[a]; }
  uint8_t pow(uint8_t a, uint64_t e) const;

  /// Trace to the prime field left in {0..p-1}.
  uint8_t abs_trace(uint8_t a) const;

  /// A generator of the multiplicative group.
  uint8_t primitive_element() const;

  static const GF& get(int q);
};

}  // namespace gk::oracle
