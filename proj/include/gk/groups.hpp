#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "gk/numtheory.hpp"

namespace gk {

enum class Family {
  Alternating,   // A_n                       dim = n
  Symmetric,     // S_n (named subgroup use)  dim = n
  Linear,        // L_n^eps(q): PSL / PSU     dim = n, sign = +1 / -1
  Symplectic,    // Sp_2m(q) / PSp_2m(q)      dim = 2m
  OrthogonalOdd, // Omega_{2m+1}(q), q odd    dim = 2m+1
  OrthogonalEven,// type O^eps_2m(q)          dim = 2m, sign
  G2,            // G_2(q) (embedded data, q = 3 only)
  Sporadic,      // by name
  DFI,           // (S_k x S_{n-k}) n A_n     dim = k, n2 = n
  Parabolic,     // P_{n2} of *host
  SubfieldSp2,   // Sp_2(q^2).2-type inside PSp_4(q)
};

/// Distinguishes the simple quotient from the larger isometry groups that
/// appear as subgroup types in the tables.
enum class Flavor {
  Simple,       // PSL, PSU, PSp, POmega, Omega_{2m+1}, ...
  Omega,        // Omega^eps_2m(q) before the central quotient
  FullIsometry, // O^eps_n(q); for symplectic groups coincides with Sp
};

struct GroupId {
  Family family;
  int dim = 0;
  int n2 = 0;
  Int q = 0;
  int sign = 0;  // +1 / -1; 0 when not applicable
  Flavor flavor = Flavor::Simple;
  std::string name;                 // sporadic label
  std::shared_ptr<GroupId> host;    // parabolic host

  static GroupId alternating(int n);
  static GroupId symmetric(int n);
  static GroupId linear(int n, const Int& q, int sign = +1,
                        Flavor f = Flavor::Simple);
  static GroupId symplectic(int dim, const Int& q, Flavor f = Flavor::Simple);
  static GroupId orthogonal_odd(int dim, const Int& q,
                                Flavor f = Flavor::Simple);
  static GroupId orthogonal_even(int dim, const Int& q, int sign,
                                 Flavor f = Flavor::Simple);
  static GroupId g2(const Int& q);
  static GroupId sporadic(const std::string& name);
  static GroupId dfi(int k, int n);
  static GroupId parabolic(const GroupId& host, int node);
  static GroupId subfield_sp2(const Int& q);
  static GroupId named(const std::string& label);  // fixed alias table

  // field characteristic / exponent for classical families (q = p^f)
  Int characteristic() const;
  unsigned field_degree() const;

  std::string str() const;
  bool operator==(const GroupId& other) const;
  bool operator!=(const GroupId& other) const { return !(*this == other); }
  bool valid(std::string* why = nullptr) const;
};

/// Applies the standard exceptional isomorphisms until a fixed point, so
/// isomorphic table entries compare equal (e.g. PSp_4(3) and U_4(2)).
GroupId canonicalize(const GroupId& g);

/// Parses the CLI group grammar: "Sp(8,2)", "POmega+(8,3)", "A(10)", "M11",
/// "Sk-x-Sn-k(7,10)", "P1(Omega+(8,2))", "Sp2q2(5)", ...
GroupId parse_group(const std::string& spec);

struct GroupParseError : std::runtime_error {
  size_t position;
  GroupParseError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

}  // namespace gk
