#include "gk/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gk {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 splitmix64(u64& state) {
  state += 0x9e3779b97f4a7c15ULL;
  u64 z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

u64 mulmod64(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_u64(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  u64 x = powmod64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// ---- 128-bit Montgomery arithmetic (odd modulus < 2^126) -------------------

struct U256 {
  u128 lo, hi;
};

U256 mul_full(u128 a, u128 b) {
  u64 a0 = (u64)a, a1 = (u64)(a >> 64);
  u64 b0 = (u64)b, b1 = (u64)(b >> 64);
  u128 p00 = (u128)a0 * b0;
  u128 p01 = (u128)a0 * b1;
  u128 p10 = (u128)a1 * b0;
  u128 p11 = (u128)a1 * b1;
  u128 mid = p01 + p10;
  u128 carry_mid = (mid < p01) ? ((u128)1 << 64) : 0;
  u128 lo = p00 + (mid << 64);
  u128 carry_lo = (lo < p00) ? 1 : 0;
  u128 hi = p11 + (mid >> 64) + carry_mid + carry_lo;
  return {lo, hi};
}

struct Montgomery128 {
  u128 n, ninv, r2;

  explicit Montgomery128(u128 mod) : n(mod) {
    // ninv = -n^{-1} mod 2^128, by Newton iteration
    u128 inv = n;  // n odd: inv == n^{-1} mod 2^3-ish, refine
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    ninv = (u128)0 - inv;
    // r2 = 2^256 mod n, computed by repeated doubling of 2^128 mod n
    u128 r = ((u128)0 - n) % n;  // 2^128 mod n
    r2 = r;
    for (int i = 0; i < 128; ++i) {
      r2 <<= 1;
      if (r2 >= n || r2 < r) r2 -= n;  // handle wrap (n < 2^126 so shift safe)
      r = r2;
    }
  }

  u128 redc(U256 t) const {
    u128 m = t.lo * ninv;
    U256 mn = mul_full(m, n);
    u128 lo = t.lo + mn.lo;
    u128 carry = (lo < t.lo) ? 1 : 0;
    u128 hi = t.hi + mn.hi + carry;
    if (hi >= n) hi -= n;
    return hi;
  }

  u128 to_mont(u128 a) const { return redc(mul_full(a % n, r2)); }
  u128 from_mont(u128 a) const { return redc(U256{a, 0}); }
  u128 mul(u128 a, u128 b) const { return redc(mul_full(a, b)); }
  u128 add(u128 a, u128 b) const {
    u128 s = a + b;
    if (s >= n || s < a) s -= n;
    return s;
  }
};

u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 to_u128(const Int& n) {
  Int hi = n >> 64;
  Int lo = n - (hi << 64);
  return ((u128)hi.get_ui() << 64) | (u128)lo.get_ui();
}

Int from_u128(u128 v) {
  Int hi = (u64)(v >> 64);
  return (hi << 64) + Int((u64)v);
}

// Pollard-Brent rho on a modulus < 2^126; returns a nontrivial factor of n
// (n composite, odd, not a prime power handled by caller retries).
u128 brent_rho_u128(u128 n, u64& rng_state) {
  Montgomery128 mont(n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    u128 c = mont.to_mont(splitmix64(rng_state) % (n - 1) + 1);
    u128 y = mont.to_mont(splitmix64(rng_state) % n);
    u128 g = 1, q = mont.to_mont(1), x = 0, ys = 0;
    const unsigned m = 128;
    for (unsigned r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = mont.add(mont.mul(y, y), c);
      for (unsigned k = 0; k < r && g == 1; k += m) {
        ys = y;
        unsigned lim = std::min(m, r - k);
        for (unsigned i = 0; i < lim; ++i) {
          y = mont.add(mont.mul(y, y), c);
          u128 diff = x >= y ? x - y : y - x;
          q = mont.mul(q, diff ? diff : 1);
        }
        g = gcd_u128(mont.from_mont(q), n);
      }
      if (r > ((u128)1 << 40)) break;  // safety; never expected
    }
    if (g == n) {
      // backtrack one step at a time
      g = 1;
      while (g == 1) {
        ys = mont.add(mont.mul(ys, ys), c);
        u128 diff = x >= ys ? x - ys : ys - x;
        g = gcd_u128(mont.from_mont(diff ? diff : 1), n);
      }
    }
    if (g != n && g != 1) return g;
  }
  throw std::runtime_error("rho failed to find a factor");
}

Int brent_rho_mpz(const Int& n, u64& rng_state) {
  gmp_randclass rnd(gmp_randinit_default);
  rnd.seed((unsigned long)splitmix64(rng_state));
  for (int attempt = 0; attempt < 64; ++attempt) {
    Int c = rnd.get_z_range(n - 1) + 1;
    Int y = rnd.get_z_range(n);
    Int g = 1, q = 1, x, ys;
    const unsigned m = 128;
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        unsigned long lim = std::min<unsigned long>(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(Int(abs(x - ys)), n);
      }
    }
    if (g != n && g != 1) return g;
  }
  throw std::runtime_error("rho (gmp) failed to find a factor");
}

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> table = primes_upto(1 << 16);
  return table;
}

void factor_rec(const Int& n, std::vector<Int>& out, u64& rng_state) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  // perfect powers
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::vector<Int> sub;
        factor_rec(root, sub, rng_state);
        for (unsigned i = 0; i < k; ++i)
          out.insert(out.end(), sub.begin(), sub.end());
        return;
      }
    }
  }
  Int d;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 126) {
    d = from_u128(brent_rho_u128(to_u128(n), rng_state));
  } else {
    d = brent_rho_mpz(n, rng_state);
  }
  factor_rec(d, out, rng_state);
  factor_rec(n / d, out, rng_state);
}

}  // namespace

// ---- Factorization ----------------------------------------------------------

unsigned Factorization::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

Factorization Factorization::odd_part() const {
  Factorization r;
  for (const auto& [p, e] : factors)
    if (p != 2) r.mul_prime(p, e);
  return r;
}

std::vector<Int> Factorization::prime_support() const {
  std::vector<Int> r;
  r.reserve(factors.size());
  for (const auto& [p, e] : factors) r.push_back(p);
  return r;
}

bool Factorization::divides(const Factorization& other) const {
  for (const auto& [p, e] : factors)
    if (other.exponent_of(p) < e) return false;
  return true;
}

Factorization& Factorization::mul(const Factorization& other) {
  for (const auto& [p, e] : other.factors) mul_prime(p, e);
  return *this;
}

Factorization& Factorization::mul_prime(const Int& p, unsigned e) {
  if (e == 0) return *this;
  Int pe;
  mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
  value *= pe;
  auto it = std::lower_bound(
      factors.begin(), factors.end(), p,
      [](const auto& a, const Int& b) { return a.first < b; });
  if (it != factors.end() && it->first == p)
    it->second += e;
  else
    factors.insert(it, {p, e});
  return *this;
}

Factorization Factorization::pow(unsigned e) const {
  Factorization r;
  if (e == 0) return r;
  for (const auto& [p, k] : factors) r.mul_prime(p, k * e);
  return r;
}

std::string Factorization::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

bool Factorization::consistent() const {
  Int prod = 1;
  Int prev = 0;
  for (const auto& [p, e] : factors) {
    if (p <= prev || e == 0 || !is_prime(p)) return false;
    prev = p;
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pe;
  }
  return prod == value;
}

Factorization mul(Factorization a, const Factorization& b) {
  a.mul(b);
  return a;
}

// ---- Primality ---------------------------------------------------------------

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL})
    if (!miller_rabin_u64(n, a)) return false;
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    u64 v = to_u128(n) & ~(u64)0;
    return is_prime_u64(v);
  }
  // small-prime screen
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  u64 state = 0x2545f4914f6cdd1dULL;  // fixed stream: reproducible
  for (int round = 0; round < 64; ++round) {
    Int a = 2 + Int(splitmix64(state)) % (n - 3);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// ---- factor -------------------------------------------------------------------

Factorization factor(const Int& n) {
  if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
  Factorization result;
  result.value = 1;
  if (n == 1) return result;
  Int rest = n;
  for (uint32_t p : small_primes()) {
    if (Int(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    if (e) result.mul_prime(p, e);
    if (rest == 1) return result;
  }
  if (rest > 1) {
    std::vector<Int> primes;
    u64 state = 0x243f6a8885a308d3ULL;
    factor_rec(rest, primes, state);
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
      size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      result.mul_prime(primes[i], unsigned(j - i));
      i = j;
    }
  }
  return result;
}

Factorization factor_u64(u64 n) { return factor(Int(from_u128(n))); }

// ---- phi_order / ppd ------------------------------------------------------------

unsigned long phi_order(const Int& r, const Int& q) {
  if (!is_prime(r) || r == 2 || mpz_divisible_p(q.get_mpz_t(), r.get_mpz_t()))
    throw std::invalid_argument("phi_order: need odd prime r with gcd(r,q)=1");
  Int n = r - 1;
  Factorization nf = factor(n);
  Int order = n;
  for (const auto& [p, e] : nf.factors) {
    for (unsigned i = 0; i < e; ++i) {
      Int cand = order / p;
      Int t;
      mpz_powm(t.get_mpz_t(), q.get_mpz_t(), cand.get_mpz_t(), r.get_mpz_t());
      if (t == 1)
        order = cand;
      else
        break;
    }
  }
  return order.get_ui();
}

Int cyclotomic(unsigned e, const Int& q) {
  // Phi_e(q) = prod_{d | e} (q^d - 1)^{mu(e/d)}
  Int num = 1, den = 1;
  for (unsigned d = 1; d <= e; ++d) {
    if (e % d) continue;
    unsigned m = e / d;
    // mu(m)
    int mu = 1;
    unsigned mm = m;
    for (unsigned p = 2; p * p <= mm; ++p) {
      if (mm % p == 0) {
        mm /= p;
        if (mm % p == 0) {
          mu = 0;
          break;
        }
        mu = -mu;
      }
    }
    if (mu != 0 && mm > 1) mu = -mu;
    if (mu == 0) continue;
    Int qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    if (mu == 1)
      num *= qd - 1;
    else
      den *= qd - 1;
  }
  Int res;
  mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return res;
}

namespace {
Int stripped_cyclotomic(const Int& q, unsigned e) {
  Int n = cyclotomic(e, q);
  for (unsigned p = 2; p <= e; ++p) {
    if (e % p) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
  }
  return n;
}
}  // namespace

bool has_ppd(const Int& q, unsigned e) {
  if (e < 2) return false;
  return stripped_cyclotomic(q, e) > 1;
}

std::optional<Int> ppd(const Int& q, unsigned e) {
  if (q < 2 || e < 2) throw std::invalid_argument("ppd: need q >= 2, e >= 2");
  Int n = stripped_cyclotomic(q, e);
  if (n == 1) return std::nullopt;
  if (is_prime(n)) return n;
  Factorization f = factor(n);
  return f.factors.back().first;
}

uint64_t smallest_prime_not_dividing(const Int& m) {
  for (u64 p = 2;; ++p) {
    if (!is_prime_u64(p)) continue;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return p;
  }
}

// ---- sieves -----------------------------------------------------------------

std::vector<uint32_t> primes_upto(uint32_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<uint32_t> out;
  for (uint32_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (uint64_t j = (uint64_t)i * i; j <= n; j += i) comp[j] = true;
    }
  }
  return out;
}

void PrimeTable::ensure(uint64_t limit) {
  if (limit <= limit_) return;
  limit = std::max<uint64_t>(limit, 1 << 16);
  uint64_t words = (limit / 2 + 64) / 64 + 1;
  bits_.assign(words, ~0ULL);  // odd i <-> bit i/2; 1 = prime candidate
  // bit for 1
  bits_[0] &= ~1ULL;
  auto clear_bit = [&](uint64_t n) { bits_[(n / 2) / 64] &= ~(1ULL << ((n / 2) % 64)); };
  const uint64_t block = 1ULL << 20;
  std::vector<uint32_t> base = primes_upto((uint32_t)(std::sqrt((double)limit) + 2));
  for (uint64_t lo = 3; lo <= limit; lo += block) {
    uint64_t hi = std::min(limit, lo + block - 1);
    for (uint32_t p : base) {
      if (p == 2) continue;
      uint64_t start = std::max<uint64_t>((uint64_t)p * p, ((lo + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (uint64_t j = start; j <= hi; j += 2 * p) clear_bit(j);
    }
  }
  limit_ = limit;
}

bool PrimeTable::is_prime(uint64_t n) const {
  if (n < 2) return false;
  if (n == 2) return true;
  if (n % 2 == 0) return false;
  if (n > limit_) throw std::out_of_range("PrimeTable: beyond sieve limit");
  return (bits_[(n / 2) / 64] >> ((n / 2) % 64)) & 1;
}

uint64_t PrimeTable::prev_prime(uint64_t n) const {
  for (uint64_t k = n - 1;; --k) {
    if (k < 2) throw std::out_of_range("prev_prime: none below 2");
    if (k == 2 || (k % 2 == 1 && is_prime(k))) return k;
  }
}

std::optional<std::pair<uint64_t, uint64_t>> goldbach_distinct_pair(
    uint64_t n, std::optional<uint64_t> cap, const PrimeTable& table) {
  if (n % 2 != 0 || n < 6) return std::nullopt;
  for (uint64_t r = 3; 2 * r < n; r += 2) {
    if (!table.is_prime(r)) continue;
    uint64_t s = n - r;
    if (!table.is_prime(s)) continue;
    if (cap && s >= *cap) continue;
    return std::make_pair(r, s);
  }
  return std::nullopt;
}

std::optional<std::pair<uint64_t, uint64_t>> goldbach_distinct_pair(
    uint64_t n, std::optional<uint64_t> cap) {
  PrimeTable table(n + 1);
  return goldbach_distinct_pair(n, cap, table);
}

}  // namespace gk
