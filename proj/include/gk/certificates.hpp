#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/orders.hpp"
#include "gk/semisimple.hpp"

namespace gk {

/// A stored fact about centralizers of elements of order 2 or p: either a
/// class whose centralizer order is divisible by the payload (sufficient for
/// adjacency), or a bound every relevant centralizer divisor must divide
/// (sufficient for non-adjacency). Payloads are polynomial in q and get
/// instantiated at query time.
struct UnipotentCertificate {
  std::string element;  // "[J_2,J_1^6]", "b_1", "t_3", ...
  std::vector<ClassicalFactor> payload;
  Factorization payload_extra;  // explicit polynomial part (q-powers etc.)
  bool exact = false;           // exact order rather than a divisor

  Factorization payload_order() const;
};

struct NecessaryBound {
  std::string scope;    // which elements the bound covers
  Factorization bound;  // odd prime divisors s != p of |C| divide this
};

struct SpecialDecision {
  EdgeStatus status = EdgeStatus::Unknown;
  Int r, s;
  std::string kind;     // "unipotent" / "involution" / "necessary-bound"
  std::string element;  // witnessing class label, when Present
  std::vector<std::string> payload_names;
  Factorization payload;  // instantiated divisor/bound used by the decision
};

/// Adjacency of r in {2, p} with an odd prime s from the stored certificate
/// data; Unknown whenever no stored fact applies (the caller escalates).
SpecialDecision adjacent_special(const GroupId& host, const Int& r,
                                 const Int& s);

/// The involution data for odd q: the PO_8^+(q) bound and the Omega_7(q)
/// t_3 payload, with the q mod 4 sign swap.
std::vector<UnipotentCertificate> involution_certificates_odd_q(
    const GroupId& host);

/// Involution centralizers in Omega_2m^-(q), q even: q^2 exactly at m = 2;
/// odd divisors bounded by |Sp_{2m-4}(q)| for m >= 4.
NecessaryBound omega_minus_involution_bound(const GroupId& host);

}  // namespace gk
