#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gk/numtheory.hpp"

namespace gk {

enum class SignConstraint { Any, Even, Odd };

inline constexpr unsigned kInfSupport = std::numeric_limits<unsigned>::max();

/// Minimal number of points moved by a permutation of order m with the given
/// sign, by exhaustive search over cycle-length multisets (memoized).
/// kInfSupport when the constraint is unsatisfiable.
unsigned min_support(uint64_t m, SignConstraint sign);

/// e(2) = 4, e(p) = p: the closed form min_support(p, Even) takes; kept as a
/// tested corollary of the search.
uint64_t e_of(uint64_t p);

bool adjacent_alternating(int n, uint64_t r, uint64_t s);

/// Adjacency of r,s in (S_k x S_{n-k}) n A_n via divisor splittings of rs.
bool adjacent_intransitive(int n, int k, uint64_t r, uint64_t s);

/// Every prime <= n is <= k.
bool pi_condition(int n, int k, const PrimeTable& table);

/// Gamma(A_{p+1}) != Gamma(A_p) for prime p >= 7.
bool gc1_predicate(uint64_t p, const PrimeTable& table);

/// Gamma(A_n) = Gamma(A_{n-1}) (edge sets) for odd n >= 15: n-4 composite.
bool gc2_predicate(uint64_t n, const PrimeTable& table);

/// True iff the edge sets of Gamma(A_n) and Gamma(A_{n-1}) differ, by
/// scanning all prime pairs with the e()-characterization.
bool alternating_edge_step(uint64_t n, const PrimeTable& table);

/// Same decision from the raw min_support search (slow; spot checks).
bool alternating_edge_step_combinatorial(uint64_t n, const PrimeTable& table);

// ---- scans -------------------------------------------------------------------

struct ScanLine {
  uint64_t n = 0;
  int k = -1;                // -1 when not applicable
  bool equal = false;        // graphs equal / pair exists (mode-dependent)
  std::optional<std::pair<uint64_t, uint64_t>> witness_edge;
  bool predicted = false;    // what the conjecture predicts
  bool agrees = true;
  std::string to_json() const;
};

struct ScanOptions {
  unsigned workers = 1;
  bool fast_path = true;  // k = n-1 shortcut for odd n >= 15
};

/// For even n in [lo, hi]: existence of primes r < s < p (p the largest prime
/// below n) with r + s = n. Lines only for counterexamples unless verbose.
std::vector<ScanLine> scan_goldbach_variant(uint64_t lo, uint64_t hi,
                                            const ScanOptions& opt = {},
                                            bool verbose = false);

/// For n in [lo, hi] and every admissible k: compare Gamma(A_n) with the
/// intransitive subgroup graph, against the conjectured classification.
std::vector<ScanLine> scan_c13(uint64_t lo, uint64_t hi,
                               const ScanOptions& opt = {});

/// For odd n in [lo, hi]: gc2 predicate vs direct edge comparison.
std::vector<ScanLine> scan_gc2(uint64_t lo, uint64_t hi,
                               const ScanOptions& opt = {});

/// Set of element orders of A_n (Even) or S_n (Any), n <= 60.
std::vector<uint64_t> permutation_spectrum(int n, SignConstraint sign);

/// Element orders of (S_k x S_{n-k}) n A_n.
std::vector<uint64_t> dfi_spectrum(int k, int n);

}  // namespace gk
