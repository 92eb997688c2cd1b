#pragma once

#include <string>
#include <vector>

#include "gk/groups.hpp"
#include "gk/numtheory.hpp"

namespace gk {

struct GroupOrder {
  GroupId group;
  Factorization order;
};

/// Exact group order, held factored throughout.
GroupOrder order_of(const GroupId& g);
Factorization order_fact(const GroupId& g);

/// Prime support of the group order.
std::vector<Int> pi(const GroupId& g);

bool pi_equal(const GroupId& a, const GroupId& b);

/// true iff |sub| divides |sup| (exponent-wise on the factorizations).
bool divides_order(const GroupId& sub, const GroupId& sup);

std::string order_json(const GroupOrder& go);

// ---- classical building blocks ----------------------------------------------
// The factors that appear inside centralizer order formulas. `q` is the
// field parameter of the factor itself (already powered where needed).

struct ClassicalFactor {
  enum class Kind { GL, GU, Sp, SOPlus, SOMinus, SOOdd, OPlus, OMinus };
  Kind kind;
  int dim;  // natural module dimension (2m for Sp/SO^eps, n for GL/GU)
  Int q;

  Factorization order() const;
  std::string str() const;
};

Factorization gl_order(int n, const Int& q);
Factorization gu_order(int n, const Int& q);
Factorization sp_order(int dim, const Int& q);              // dim = 2m
Factorization so_odd_order(int dim, const Int& q);          // dim = 2m+1, q odd
Factorization so_even_order(int dim, const Int& q, int eps);  // q odd
Factorization o_even_order(int dim, const Int& q, int eps);   // full O, any q
Factorization omega_even_order(int dim, const Int& q, int eps);

/// Memoized factorization of q^k - 1 and q^k + 1.
const Factorization& qpow_minus_one(const Int& q, unsigned k);
const Factorization& qpow_plus_one(const Int& q, unsigned k);

}  // namespace gk
