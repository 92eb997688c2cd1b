#include "gk/certificates.hpp"

#include <sstream>

namespace gk {

namespace {

Factorization qpow(const Int& q, unsigned e) { return factor(q).pow(e); }

SpecialDecision present(const Int& r, const Int& s, const std::string& kind,
                        const std::string& element,
                        const std::vector<ClassicalFactor>& payload,
                        const Factorization& extra) {
  SpecialDecision d;
  d.status = EdgeStatus::Present;
  d.r = r;
  d.s = s;
  d.kind = kind;
  d.element = element;
  d.payload = extra;
  for (const auto& f : payload) {
    d.payload_names.push_back(f.str());
    d.payload.mul(f.order());
  }
  return d;
}

SpecialDecision absent(const Int& r, const Int& s, const std::string& element,
                       const Factorization& bound) {
  SpecialDecision d;
  d.status = EdgeStatus::Absent;
  d.r = r;
  d.s = s;
  d.kind = "necessary-bound";
  d.element = element;
  d.payload = bound;
  return d;
}

SpecialDecision unknown(const Int& r, const Int& s) {
  SpecialDecision d;
  d.r = r;
  d.s = s;
  return d;
}

}  // namespace

Factorization UnipotentCertificate::payload_order() const {
  Factorization f = payload_extra;
  for (const auto& p : payload) f.mul(p.order());
  return f;
}

std::vector<UnipotentCertificate> involution_certificates_odd_q(
    const GroupId& host) {
  const Int& q = host.q;
  if (q % 2 == 0)
    throw std::invalid_argument("involution_certificates_odd_q: q must be odd");
  bool q1mod4 = (q % 4 == 1);
  std::vector<UnipotentCertificate> out;
  if (host.family == Family::OrthogonalEven && host.dim == 8 &&
      host.sign == 1) {
    // bound over all involution classes; the sign of the q^3 -+ 1 factor
    // follows the square class of -1
    UnipotentCertificate bound;
    bound.element = q1mod4 ? "t_1..t_4 (q = 1 mod 4)" : "t_1..t_4 (q = 3 mod 4)";
    Int q3 = q * q * q, q4 = q3 * q;
    bound.payload_extra =
        mul(factor(Int(q1mod4 ? q3 - 1 : q3 + 1)), factor(Int(q4 - 1)));
    bound.exact = false;
    out.push_back(bound);
    return out;
  }
  if (host.family == Family::OrthogonalOdd && host.dim == 7) {
    UnipotentCertificate t3;
    t3.element = "t_3";
    t3.payload.push_back({q1mod4 ? ClassicalFactor::Kind::SOPlus
                                 : ClassicalFactor::Kind::SOMinus,
                          6, q});
    t3.exact = false;
    out.push_back(t3);
    return out;
  }
  throw std::invalid_argument(
      "involution_certificates_odd_q: host outside the stored cases");
}

NecessaryBound omega_minus_involution_bound(const GroupId& host) {
  if (!(host.family == Family::OrthogonalEven && host.sign == -1 &&
        host.q % 2 == 0))
    throw std::invalid_argument(
        "omega_minus_involution_bound: need Omega_2m^-(q), q even");
  if (host.flavor == Flavor::FullIsometry)
    throw std::invalid_argument(
        "omega_minus_involution_bound: bounds the simple socle, not O");
  int m = host.dim / 2;
  NecessaryBound nb;
  if (m == 2) {
    nb.scope = "every involution centralizer, exactly";
    nb.bound = qpow(host.q, 2);
    return nb;
  }
  if (m >= 4) {
    nb.scope = "odd prime divisors of involution centralizers";
    nb.bound = sp_order(host.dim - 4, host.q);
    return nb;
  }
  throw std::invalid_argument("omega_minus_involution_bound: m outside {2} u [4,..)");
}

SpecialDecision adjacent_special(const GroupId& host, const Int& r,
                                 const Int& s) {
  Int p = host.characteristic();
  const Int& q = host.q;
  bool q_even = (q % 2 == 0);
  if (!(r == 2 || r == p))
    throw std::invalid_argument("adjacent_special: r must be 2 or p");
  if (s == r || s == 2)
    throw std::invalid_argument("adjacent_special: s must be odd and != r");
  int dim = host.dim;

  // symplectic hosts, r = p: transvections and the order-p bound
  if (host.family == Family::Symplectic && r == p) {
    Factorization sp2 = sp_order(dim - 2, q);
    if (s != p) {
      std::vector<ClassicalFactor> chain = {
          {ClassicalFactor::Kind::Sp, dim - 2, q}};
      Factorization extra = qpow(q, unsigned(dim - 1));
      Factorization full = mul(extra, sp2);
      if (full.is_divisible_by_prime(s)) {
        std::ostringstream el;
        el << "[J_2,J_1^" << dim - 2 << "]";
        return present(r, s, "unipotent", el.str(), chain, extra);
      }
      return absent(r, s, "order-p classes", sp2);
    }
    return unknown(r, s);
  }

  // subfield Sp_2(q^2).2-type inside PSp_4(q): order-p centralizers are
  // 2^k q^2 exactly
  if (host.family == Family::SubfieldSp2 && r == p) {
    if (s != p) {
      Factorization bound = qpow(q, 2);
      return absent(r, s, "all order-p classes: |C| = 2^k q^2", bound);
    }
    return unknown(r, s);
  }

  if (host.family == Family::OrthogonalEven && q_even && r == 2) {
    int m = dim / 2;
    Factorization sp_small = sp_order(dim - 2, q);
    if (host.flavor == Flavor::FullIsometry) {
      if (host.sign == -1 && sp_small.is_divisible_by_prime(s)) {
        std::vector<ClassicalFactor> chain = {
            {ClassicalFactor::Kind::Sp, dim - 2, q}};
        Factorization two;
        two.mul_prime(2, 1);
        return present(r, s, "unipotent", "b_1", chain, two);
      }
      if (m >= 4 && !sp_small.is_divisible_by_prime(s))
        return absent(r, s, "order-2 classes in O", sp_small);
      return unknown(r, s);
    }
    // simple / Omega flavor: no b-type involutions
    if (m >= 4) {
      Factorization sp44 = sp_order(dim - 4, q);
      if (!sp44.is_divisible_by_prime(s))
        return absent(r, s, "order-2 classes in Omega", sp44);
      return unknown(r, s);
    }
    if (m == 2 && host.sign == -1) {
      // |C_T(y)| = q^2 exactly
      return absent(r, s, "involutions: |C| = q^2", qpow(q, 2));
    }
    return unknown(r, s);
  }

  if (host.family == Family::OrthogonalEven && !q_even && r == p) {
    int m = dim / 2;
    if (m >= 4) {
      Factorization sp44 = sp_order(dim - 4, q);
      if (!sp44.is_divisible_by_prime(s))
        return absent(r, s, "order-p classes", sp44);
    }
    return unknown(r, s);
  }

  if (host.family == Family::OrthogonalEven && !q_even && r == 2 && s != p &&
      host.dim == 8 && host.sign == 1 && host.flavor == Flavor::Simple) {
    auto certs = involution_certificates_odd_q(host);
    const Factorization& bound = certs[0].payload_extra;
    if (!bound.is_divisible_by_prime(s))
      return absent(r, s, certs[0].element, bound);
    return unknown(r, s);
  }

  if (host.family == Family::OrthogonalOdd && r == p) {
    int m = dim / 2;
    if (m == 2 && q > 3) {
      // [J_2^2, J_1] with q^2 - 1 dividing the centralizer
      Factorization pay = factor(Int(q * q - 1));
      if (pay.is_divisible_by_prime(s))
        return present(r, s, "unipotent", "[J_2^2,J_1]", {}, pay);
    }
    if (m >= 2) {
      std::vector<ClassicalFactor> chain = {
          {ClassicalFactor::Kind::SOMinus, dim - 3, q}};
      Factorization omega_part = omega_even_order(dim - 3, q, -1);
      if (omega_part.is_divisible_by_prime(s)) {
        std::ostringstream el;
        el << "[J_3,J_1^" << dim - 3 << "]";
        Factorization none;
        SpecialDecision d = present(r, s, "unipotent", el.str(), {}, none);
        d.payload = omega_part;
        d.payload_names.push_back("Omega-" + std::to_string(dim - 3) + "(" +
                                  q.get_str() + ")");
        return d;
      }
    }
    return unknown(r, s);
  }

  if (host.family == Family::OrthogonalOdd && r == 2 && s != p && dim == 7) {
    auto certs = involution_certificates_odd_q(host);
    Factorization pay = certs[0].payload_order();
    // the t_3 payload is Omega_6^{eps}(q); SO-kind covers its odd part
    Factorization omega6 =
        omega_even_order(6, q, (q % 4 == 1) ? +1 : -1);
    if (omega6.is_divisible_by_prime(s)) {
      Factorization none;
      SpecialDecision d = present(r, s, "involution", "t_3", {}, none);
      d.payload = omega6;
      d.payload_names.push_back(std::string("Omega") +
                                ((q % 4 == 1) ? "+" : "-") + "6(" +
                                q.get_str() + ")");
      return d;
    }
    return unknown(r, s);
  }

  return unknown(r, s);
}

}  // namespace gk
