#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gk/oracle/gf.hpp"

namespace gk::oracle {

using u128 = unsigned __int128;

inline constexpr int kMaxDim = 8;

/// Dense matrix over a small finite field, entries as GF indices.
struct Mat {
  uint8_t dim = 0;
  std::array<uint8_t, kMaxDim * kMaxDim> e{};

  uint8_t& at(int i, int j) { return e[i * dim + j]; }
  uint8_t at(int i, int j) const { return e[i * dim + j]; }

  static Mat identity(int d);
  bool is_identity() const;
  bool operator==(const Mat& o) const;
  std::string str(const GF& F) const;
};

Mat mul(const GF& F, const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
/// Gauss-Jordan inverse; throws if singular.
Mat inverse(const GF& F, const Mat& a);
/// a^k by repeated squaring.
Mat mat_pow(const GF& F, Mat a, uint64_t k);

/// Nonzero scalar c with m = c*I, else 0.
uint8_t scalar_of(const Mat& m);

/// Scales by the inverse of the first nonzero entry: a canonical
/// representative of the scalar class.
Mat projective_normalize(const GF& F, const Mat& m);

/// Base-q digit packing of the entries; keys are < q^(dim^2) <= 2^127
/// for every field/dimension used here.
u128 pack(const GF& F, const Mat& m);
Mat unpack(const GF& F, int dim, u128 key);

/// Order of m in the matrix group (cap guards against runaways).
unsigned element_order(const GF& F, const Mat& m, unsigned cap = 100000);
/// Least k >= 1 with m^k scalar: the order of the image modulo scalars.
unsigned coset_order(const GF& F, const Mat& m, unsigned cap = 100000);

// ---- permutations ------------------------------------------------------------

struct Perm {
  uint8_t n = 0;
  std::array<uint8_t, 16> img{};

  static Perm identity(int n);
  bool is_identity() const;
  std::string cycles() const;
};

Perm mul(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm inverse(const Perm& a);
u128 pack(const Perm& p);
unsigned element_order(const Perm& p);

}  // namespace gk::oracle
