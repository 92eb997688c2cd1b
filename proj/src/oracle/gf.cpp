#include "gk/oracle/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace gk::oracle {

namespace {

// polynomial arithmetic over F_p, coefficient vectors little-endian
using Poly = std::vector<int>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // reduce modulo the monic polynomial `mod` of degree f
  int f = int(mod.size()) - 1;
  for (int d = int(r.size()) - 1; d >= f; --d) {
    int c = r[d];
    if (c == 0) continue;
    for (int i = 0; i <= f; ++i)
      r[d - f + i] = ((r[d - f + i] - c * mod[i]) % p + p * p) % p;
  }
  r.resize(f);
  return r;
}

int poly_eval(const Poly& poly, int x, int p) {
  int r = 0;
  for (int i = int(poly.size()) - 1; i >= 0; --i) r = (r * x + poly[i]) % p;
  return r;
}

// first monic irreducible of degree f over F_p in lexicographic scan order
Poly find_irreducible(int p, int f) {
  Poly mod(f + 1, 0);
  mod[f] = 1;
  // iterate over the f low coefficients as a base-p counter
  std::vector<int> c(f, 0);
  for (;;) {
    for (int i = 0; i < f; ++i) mod[i] = c[i];
    // irreducible test for small f: no roots (f<=3) plus, for f>=4,
    // no factorization into two lower-degree polynomials (brute force)
    bool ok = true;
    for (int x = 0; x < p && ok; ++x)
      if (poly_eval(mod, x, p) == 0) ok = false;
    if (ok && f >= 4) {
      // check divisibility by all monic irreducibles of degree 2..f/2
      // via brute multiplication of factor pairs; f <= 6 here so this
      // stays tiny
      for (int d1 = 2; d1 <= f / 2 && ok; ++d1) {
        int d2 = f - d1;
        std::vector<int> a(d1 + 1, 0), b(d2 + 1, 0);
        a[d1] = 1;
        b[d2] = 1;
        std::vector<int> ca(d1, 0);
        bool done_a = false;
        while (!done_a && ok) {
          for (int i = 0; i < d1; ++i) a[i] = ca[i];
          std::vector<int> cb(d2, 0);
          bool done_b = false;
          while (!done_b && ok) {
            for (int i = 0; i < d2; ++i) b[i] = cb[i];
            Poly prod(f + 1, 0);
            for (int i = 0; i <= d1; ++i)
              for (int j = 0; j <= d2; ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            if (prod == mod) ok = false;
            int k = 0;
            while (k < d2 && ++cb[k] == p) cb[k++] = 0;
            if (k == d2) done_b = true;
          }
          int k = 0;
          while (k < d1 && ++ca[k] == p) ca[k++] = 0;
          if (k == d1) done_a = true;
        }
      }
    }
    if (ok) return mod;
    int k = 0;
    while (k < f && ++c[k] == p) c[k++] = 0;
    if (k == f) throw std::logic_error("no irreducible found");
  }
}

GF build(int q) {
  // q = p^f
  int p = 0, f = 0;
  for (int cand = 2; cand <= q; ++cand) {
    bool prime = true;
    for (int d = 2; d * d <= cand; ++d)
      if (cand % d == 0) prime = false;
    if (!prime) continue;
    int v = cand, e = 1;
    while (v < q) v *= cand, ++e;
    if (v == q) {
      p = cand;
      f = e;
      break;
    }
  }
  if (p == 0) throw std::invalid_argument("GF: q is not a prime power");

  GF F;
  F.p = p;
  F.f = f;
  F.q = q;
  F.add_t.resize(q * q);
  F.sub_t.resize(q * q);
  F.mul_t.resize(q * q);
  F.inv_t.resize(q);
  F.neg_t.resize(q);
  F.frob_t.resize(q);

  // element index <-> coefficient vector base p
  auto coeffs = [&](int x) {
    Poly c(f, 0);
    for (int i = 0; i < f; ++i) {
      c[i] = x % p;
      x /= p;
    }
    return c;
  };
  auto index = [&](const Poly& c) {
    int x = 0;
    for (int i = f - 1; i >= 0; --i) x = x * p + c[i];
    return x;
  };

  Poly mod = f > 1 ? find_irreducible(p, f) : Poly{0, 1};
  for (int a = 0; a < q; ++a) {
    Poly ca = coeffs(a);
    for (int b = 0; b < q; ++b) {
      Poly cb = coeffs(b);
      Poly s(f), d(f);
      for (int i = 0; i < f; ++i) {
        s[i] = (ca[i] + cb[i]) % p;
        d[i] = ((ca[i] - cb[i]) % p + p) % p;
      }
      F.add_t[a * q + b] = uint8_t(index(s));
      F.sub_t[a * q + b] = uint8_t(index(d));
      F.mul_t[a * q + b] =
          f > 1 ? uint8_t(index(poly_mulmod(ca, cb, mod, p)))
                : uint8_t((a * b) % p);
    }
    F.neg_t[a] = F.sub_t[0 * q + a];
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (F.mul_t[a * q + b] == 1) F.inv_t[a] = uint8_t(b);
  F.inv_t[0] = 0;
  for (int a = 0; a < q; ++a) {
    int x = a;
    for (int i = 1; i < p; ++i) x = F.mul_t[x * q + a];
    F.frob_t[a] = uint8_t(x);
  }
  return F;
}

}  // namespace

uint8_t GF::pow(uint8_t a, uint64_t e) const {
  uint8_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint8_t GF::abs_trace(uint8_t a) const {
  uint8_t t = 0, x = a;
  for (int i = 0; i < f; ++i) {
    t = add(t, x);
    x = frob(x);
  }
  return t;  // lies in the prime subfield, whose index equals the residue
}

uint8_t GF::primitive_element() const {
  for (int g = 2; g < q; ++g) {
    int ordv = 1;
    uint8_t x = uint8_t(g);
    while (x != 1) {
      x = mul(x, uint8_t(g));
      ++ordv;
    }
    if (ordv == q - 1) return uint8_t(g);
  }
  return 1;  // q = 2
}

const GF& GF::get(int q) {
  static std::map<int, GF> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build(q)).first;
  return it->second;
}

}  // namespace gk::oracle
