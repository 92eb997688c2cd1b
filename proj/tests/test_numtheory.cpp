#include "doctest.h"

#include <map>
#include <set>

#include "gk/numtheory.hpp"

using namespace gk;

namespace {

// independent trial-division oracle
std::map<uint64_t, unsigned> trial_factor(uint64_t n) {
  std::map<uint64_t, unsigned> out;
  for (uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out[p]++;
      n /= p;
    }
  if (n > 1) out[n]++;
  return out;
}

}  // namespace

TEST_CASE("factor matches trial division oracle") {
  CHECK(factor(1).factors.empty());
  CHECK(factor(1).value == 1);

  auto f720 = factor(720);
  CHECK(f720.to_string() == "2^4 * 3^2 * 5");
  auto f255 = factor(255);
  CHECK(f255.to_string() == "3 * 5 * 17");

  for (uint64_t n : {2ULL, 97ULL, 1024ULL, 123456ULL, 999999937ULL,
                     1451520ULL, 25920ULL, 4245696ULL, 720720ULL}) {
    auto f = factor_u64(n);
    CHECK(f.consistent());
    CHECK(f.value == Int((unsigned long)n));
    auto oracle = trial_factor(n);
    REQUIRE(f.factors.size() == oracle.size());
    for (const auto& [p, e] : f.factors)
      CHECK(oracle.at(p.get_ui()) == e);
  }
}

TEST_CASE("factor handles large semiprime cofactors") {
  Int m61("2305843009213693951");  // 2^61-1, prime
  Int m31("2147483647");           // 2^31-1, prime
  auto f = factor(m61 * m31);      // 92-bit semiprime, beyond the 2^16 sieve
  CHECK(f.consistent());
  CHECK(f.exponent_of(m31) == 1);
  CHECK(f.exponent_of(m61) == 1);
  auto g = factor(m61 * m61);      // perfect power path
  CHECK(g.exponent_of(m61) == 2);
}

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(561));          // Carmichael
  CHECK(is_prime_u64(2147483647ULL));
  CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
  CHECK(!is_prime_u64(18446744073709551555ULL));
  CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127-1
  CHECK(!is_prime(Int("170141183460469231731687303715884105725")));
}

TEST_CASE("phi_order examples and property") {
  CHECK(phi_order(5, 2) == 4);
  CHECK(phi_order(3, 4) == 1);
  CHECK(phi_order(17, 2) == 8);
  CHECK_THROWS(phi_order(5, 10));  // r | q

  // r | q^n - 1  <=>  phi_order(r,q) | n
  auto primes = primes_upto(10000);
  for (uint32_t r : primes) {
    if (r == 2 || r > 997) continue;  // full range covered below by strides
    for (Int q : {2, 3, 9, 64}) {
      if (mpz_divisible_ui_p(q.get_mpz_t(), r)) continue;
      unsigned long i = phi_order(r, q);
      CHECK((r - 1) % i == 0);
      for (unsigned n = 1; n <= 48; ++n) {
        Int t;
        Int e(n);
        mpz_powm(t.get_mpz_t(), q.get_mpz_t(), e.get_mpz_t(), Int(r).get_mpz_t());
        CHECK((t == 1) == (n % i == 0));
      }
    }
  }
  // sparser full sweep to 10^4 across all q <= 64
  for (size_t k = 0; k < primes.size(); k += 17) {
    uint32_t r = primes[k];
    if (r == 2) continue;
    for (uint32_t q = 2; q <= 64; ++q) {
      if (q % r == 0) continue;
      unsigned long i = phi_order(r, q);
      Int t;
      mpz_powm_ui(t.get_mpz_t(), Int(q).get_mpz_t(), i, Int(r).get_mpz_t());
      CHECK(t == 1);
      CHECK((r - 1) % i == 0);
    }
  }
}

TEST_CASE("ppd examples") {
  CHECK(!ppd(2, 6).has_value());
  CHECK(ppd(2, 4).value() == 5);
  CHECK(ppd(2, 8).value() == 17);
  CHECK(ppd(2, 3).value() == 7);
  CHECK(ppd(2, 5).value() == 31);
  CHECK(ppd(3, 6).value() == 7);
  CHECK(!ppd(7, 2).has_value());   // 7 Mersenne
  CHECK(!ppd(31, 2).has_value());
  CHECK(ppd(4, 2).value() == 5);
}

TEST_CASE("ppd absent exactly on the Zsigmondy exceptions (q<=64, e<=24)") {
  for (uint32_t q = 2; q <= 64; ++q) {
    // prime powers only
    auto f = factor_u64(q);
    if (f.factors.size() != 1) continue;
    for (unsigned e = 2; e <= 24; ++e) {
      bool expect_absent =
          (q == 2 && e == 6) ||
          (e == 2 && ((q + 1) & q) == 0);  // q+1 a power of two (q Mersenne)
      auto r = ppd(q, e);
      CHECK(r.has_value() == !expect_absent);
      if (r) {
        // r = 1 mod e, r | q^e-1, and r divides no earlier q^i-1
        CHECK((*r - 1) % e == 0);
        for (unsigned i = 1; i <= e; ++i) {
          Int t;
          mpz_powm_ui(t.get_mpz_t(), Int(q).get_mpz_t(), i, r->get_mpz_t());
          CHECK((t == 1) == (i == e));
        }
      }
    }
  }
}

TEST_CASE("smallest_prime_not_dividing") {
  CHECK(smallest_prime_not_dividing(8) == 3);
  CHECK(smallest_prime_not_dividing(6) == 5);
  CHECK(smallest_prime_not_dividing(12) == 5);
  CHECK(smallest_prime_not_dividing(2) == 3);
  // Bertrand step: for even m >= 8, result < m/2
  for (uint64_t m = 8; m <= 4096; m += 2)
    CHECK(smallest_prime_not_dividing(m) * 2 < m);
}

TEST_CASE("goldbach_distinct_pair") {
  auto p1 = goldbach_distinct_pair(12, 11);
  REQUIRE(p1.has_value());
  CHECK(p1->first == 5);
  CHECK(p1->second == 7);

  auto p2 = goldbach_distinct_pair(16, 13);
  REQUIRE(p2.has_value());
  CHECK(p2->first == 5);  // (3,13) rejected by s < cap
  CHECK(p2->second == 11);

  auto p3 = goldbach_distinct_pair(8);
  REQUIRE(p3.has_value());
  CHECK(p3->first == 3);
  CHECK(p3->second == 5);

  // n = 10 with cap 7: 3+7 rejected, 5+5 not distinct
  CHECK(!goldbach_distinct_pair(10, 7).has_value());
}

TEST_CASE("goldbach agrees with exhaustive double loop up to 10^4") {
  PrimeTable table(10001);
  for (uint64_t n = 6; n <= 10000; n += 2) {
    bool found = false;
    uint64_t br = 0, bs = 0;
    for (uint64_t r = 3; r < n && !found; ++r) {
      if (!table.is_prime(r)) continue;
      uint64_t s = n - r;
      if (s <= r) break;
      if (table.is_prime(s)) {
        found = true;
        br = r;
        bs = s;
      }
    }
    auto got = goldbach_distinct_pair(n, std::nullopt, table);
    CHECK(got.has_value() == found);
    if (got && found) {
      CHECK(got->first == br);
      CHECK(got->second == bs);
    }
  }
}

TEST_CASE("prime table") {
  PrimeTable t(2000000);
  CHECK(t.is_prime(1999993));
  CHECK(!t.is_prime(1999995));
  CHECK(t.prev_prime(100) == 97);
  CHECK(t.prev_prime(12) == 11);
  auto primes = primes_upto(100000);
  size_t count = 0;
  for (uint64_t n = 2; n <= 100000; ++n)
    if (t.is_prime(n)) ++count;
  CHECK(count == primes.size());
}
