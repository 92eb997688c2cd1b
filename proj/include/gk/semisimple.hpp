#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/groups.hpp"
#include "gk/orders.hpp"

namespace gk {

/// Parameterization of a conjugacy class of elements of odd prime order
/// r != p in a symplectic or orthogonal group: block multiplicities over the
/// Frobenius orbits of the r-th roots of unity, plus the fixed space.
///
/// `a` holds the nonzero multiplicities as a descending multiset; for odd i
/// each entry stands for a *pair* of mutually dual orbits (2i dimensions per
/// unit). `assignments` counts how many ordered orbit labelings share this
/// multiset, i.e. how many distinct classes the entry represents.
struct ClassTuple {
  GroupId host;
  Int r;
  unsigned i = 0;   // Phi(r, q)
  Int t;            // (r-1)/i orbits
  std::vector<unsigned> a;
  unsigned ell = 0;
  int eps_prime = 0;  // +1 / -1, 0 for odd-dim hosts or ell == 0
  Int assignments;

  unsigned sum_a() const;       // total Sum a_j over all t slots
  unsigned block_dims() const;  // dimensions used by the blocks
  std::string str() const;
};

/// Centralizer order read off a ClassTuple: the odd part is exact; the
/// 2-part is bracketed by the residual 2^{-a} ambiguity of the formula
/// (exact for symplectic hosts).
struct CentralizerOrder {
  ClassTuple tuple;
  std::vector<ClassicalFactor> chain;  // factors of the product formula
  Factorization raw_product;           // product of the chain
  Factorization odd_part;              // exact odd part of |C(x)|
  long two_lower = 0, two_upper = 0;   // v_2(|C(x)|) lies in [lower, upper]

  bool two_exact() const { return two_lower == two_upper; }
  /// |C(x)| assuming the symplectic exact exponent; throws if inexact.
  Factorization exact_order() const;
};

/// All class tuples of elements of order r in the host, in lexicographic
/// order of (sum a_j, a). Empty iff r does not divide |host|.
std::vector<ClassTuple> enumerate_classes(const GroupId& host, const Int& r);

CentralizerOrder centralizer_order(const ClassTuple& tuple);

enum class EdgeStatus { Present, Absent, Unknown };

struct SemisimpleDecision {
  EdgeStatus status = EdgeStatus::Unknown;
  Int r, s;
  std::optional<ClassTuple> witness;   // Present: first witnessing tuple
  std::string divisor_factor;          // chain factor divisible by s
  std::vector<ClassTuple> exhausted;   // Absent: every tuple, none divisible
};

/// Decides r ~ s via centralizers of order-r elements. Exact for odd s;
/// for s = 2 the decision uses the 2-part bracket and may return Unknown
/// on orthogonal hosts.
SemisimpleDecision adjacent_semisimple(const GroupId& host, const Int& r,
                                       const Int& s);

/// The bound N(i): every prime s != p dividing the centralizer of an x with
/// Phi(r,q) = i divides N(i). Only the three host shapes of the fixed table.
Factorization n_bound(const GroupId& host, unsigned i);

}  // namespace gk
