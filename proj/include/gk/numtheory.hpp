#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gk {

using Int = mpz_class;

/// A positive integer held together with its certified prime factorization.
/// Primes are strictly increasing; the product of prime^exp equals value.
struct Factorization {
  Int value = 1;
  std::vector<std::pair<Int, unsigned>> factors;

  static Factorization one() { return Factorization{}; }

  unsigned exponent_of(const Int& p) const;
  unsigned two_part() const { return exponent_of(2); }
  Factorization odd_part() const;
  std::vector<Int> prime_support() const;

  bool divides(const Factorization& other) const;  // exponent-wise
  bool is_divisible_by_prime(const Int& p) const { return exponent_of(p) > 0; }

  Factorization& mul(const Factorization& other);
  Factorization& mul_prime(const Int& p, unsigned e);
  Factorization pow(unsigned e) const;

  std::string to_string() const;  // e.g. "2^6 * 3^4 * 5"
  bool consistent() const;        // recompute product, check sortedness/primality
};

Factorization mul(Factorization a, const Factorization& b);

// -- Primality ---------------------------------------------------------------
//
// Deterministic Miller-Rabin for n < 2^64 (bases 2..37); for larger n, 64
// Miller-Rabin rounds with bases drawn from a fixed splitmix64 stream, so
// results are reproducible run to run.
bool is_prime(const Int& n);
bool is_prime_u64(uint64_t n);

// -- Factorization -----------------------------------------------------------
//
// Trial division by primes < 2^16, then Pollard-Brent rho (Montgomery
// arithmetic for moduli < 2^126, gmp above). Deterministic.
Factorization factor(const Int& n);
Factorization factor_u64(uint64_t n);

// Multiplicative order of q modulo the odd prime r; rejects r | q.
// Returns i with i | r-1 and r | q^i - 1.
unsigned long phi_order(const Int& r, const Int& q);

// Largest primitive prime divisor of q^e - 1 (prime r with r | q^e - 1 and
// r not dividing q^i - 1 for i < e). Absent exactly when e = 1, when e = 2
// with q+1 a power of two, or when (q,e) = (2,6).
std::optional<Int> ppd(const Int& q, unsigned e);

// True iff q^e - 1 has a primitive prime divisor; avoids the factorization.
bool has_ppd(const Int& q, unsigned e);

// Value of the e-th cyclotomic polynomial at q.
Int cyclotomic(unsigned e, const Int& q);

// Least prime not dividing the even integer m.
uint64_t smallest_prime_not_dividing(const Int& m);

// -- Sieves ------------------------------------------------------------------

std::vector<uint32_t> primes_upto(uint32_t n);

/// Bit table of primes up to a limit, grown on demand; segmented fill with
/// 2^20-entry blocks so scans over [12, 10^8] run at constant extra memory.
class PrimeTable {
 public:
  explicit PrimeTable(uint64_t limit = 0) { ensure(limit); }
  void ensure(uint64_t limit);
  bool is_prime(uint64_t n) const;
  uint64_t prev_prime(uint64_t n) const;  // largest prime < n
  uint64_t limit() const { return limit_; }

 private:
  std::vector<uint64_t> bits_;  // odd numbers only
  uint64_t limit_ = 0;
};

// Least-r pair of distinct primes r < s with r + s = n (and s < cap when
// given). n even; absent when no such pair exists.
std::optional<std::pair<uint64_t, uint64_t>> goldbach_distinct_pair(
    uint64_t n, std::optional<uint64_t> cap, const PrimeTable& table);
std::optional<std::pair<uint64_t, uint64_t>> goldbach_distinct_pair(
    uint64_t n, std::optional<uint64_t> cap = std::nullopt);

}  // namespace gk
