#include "gk/orders.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace gk {

namespace {

struct QPowKey {
  Int q;
  unsigned k;
  bool plus;
  bool operator<(const QPowKey& o) const {
    if (q != o.q) return q < o.q;
    if (k != o.k) return k < o.k;
    return plus < o.plus;
  }
};

std::map<QPowKey, Factorization>& qpow_cache() {
  static std::map<QPowKey, Factorization> cache;
  return cache;
}

std::mutex& qpow_mutex() {
  static std::mutex m;
  return m;
}

Factorization factorial_fact(int n) {
  Factorization f;
  for (int i = 2; i <= n; ++i) f.mul(factor(i));
  return f;
}

Factorization half(Factorization f) {
  // divide by 2 exactly
  for (auto& [p, e] : f.factors) {
    if (p == 2) {
      f.value /= 2;
      if (--e == 0)
        f.factors.erase(f.factors.begin());
      return f;
    }
  }
  throw std::logic_error("half: odd value");
}

Factorization div_exact(Factorization f, const Factorization& d) {
  for (const auto& [p, e] : d.factors) {
    bool found = false;
    for (auto it = f.factors.begin(); it != f.factors.end(); ++it) {
      if (it->first == p) {
        if (it->second < e) throw std::logic_error("div_exact: not divisible");
        it->second -= e;
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        f.value /= pe;
        if (it->second == 0) f.factors.erase(it);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("div_exact: not divisible");
  }
  return f;
}

const Factorization& sporadic_order(const std::string& name) {
  static const std::map<std::string, Factorization> table = [] {
    std::map<std::string, Factorization> t;
    auto add = [&](const std::string& n,
                   std::initializer_list<std::pair<int, unsigned>> fs) {
      Factorization f;
      for (auto [p, e] : fs) f.mul_prime(p, e);
      t[n] = f;
    };
    add("M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}});
    add("M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}});
    add("M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}});
    add("M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}});
    add("M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}});
    add("HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}});
    add("McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}});
    add("Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}});
    add("Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}});
    add("TF42", {{2, 11}, {3, 3}, {5, 2}, {13, 1}});  // 2F4(2)'
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown sporadic group: " + name);
  return it->second;
}

}  // namespace

const Factorization& qpow_minus_one(const Int& q, unsigned k) {
  std::lock_guard<std::mutex> lock(qpow_mutex());
  QPowKey key{q, k, false};
  auto it = qpow_cache().find(key);
  if (it != qpow_cache().end()) return it->second;
  Int v;
  mpz_pow_ui(v.get_mpz_t(), q.get_mpz_t(), k);
  return qpow_cache().emplace(key, factor(v - 1)).first->second;
}

const Factorization& qpow_plus_one(const Int& q, unsigned k) {
  std::lock_guard<std::mutex> lock(qpow_mutex());
  QPowKey key{q, k, true};
  auto it = qpow_cache().find(key);
  if (it != qpow_cache().end()) return it->second;
  Int v;
  mpz_pow_ui(v.get_mpz_t(), q.get_mpz_t(), k);
  return qpow_cache().emplace(key, factor(v + 1)).first->second;
}

namespace {
Factorization q_power(const Int& q, unsigned e) {
  return factor(q).pow(e);
}
}  // namespace

Factorization gl_order(int n, const Int& q) {
  if (n < 0) throw std::invalid_argument("gl_order: n < 0");
  Factorization f = q_power(q, n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) f.mul(qpow_minus_one(q, i));
  return f;
}

Factorization gu_order(int n, const Int& q) {
  if (n < 0) throw std::invalid_argument("gu_order: n < 0");
  Factorization f = q_power(q, n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    f.mul(i % 2 ? qpow_plus_one(q, i) : qpow_minus_one(q, i));
  return f;
}

Factorization sp_order(int dim, const Int& q) {
  if (dim % 2) throw std::invalid_argument("sp_order: odd dim");
  int m = dim / 2;
  Factorization f = q_power(q, m * m);
  for (int i = 1; i <= m; ++i) f.mul(qpow_minus_one(q, 2 * i));
  return f;
}

Factorization so_odd_order(int dim, const Int& q) {
  if (dim % 2 == 0) throw std::invalid_argument("so_odd_order: even dim");
  int m = dim / 2;
  Factorization f = q_power(q, m * m);
  for (int i = 1; i <= m; ++i) f.mul(qpow_minus_one(q, 2 * i));
  return f;
}

Factorization so_even_order(int dim, const Int& q, int eps) {
  if (dim % 2 || dim < 2) throw std::invalid_argument("so_even_order: bad dim");
  if (q % 2 == 0) throw std::invalid_argument("so_even_order: q must be odd");
  int m = dim / 2;
  Factorization f = q_power(q, m * (m - 1));
  f.mul(eps > 0 ? qpow_minus_one(q, m) : qpow_plus_one(q, m));
  for (int i = 1; i < m; ++i) f.mul(qpow_minus_one(q, 2 * i));
  return f;
}

Factorization o_even_order(int dim, const Int& q, int eps) {
  if (dim % 2 || dim < 2) throw std::invalid_argument("o_even_order: bad dim");
  int m = dim / 2;
  Factorization f;
  f.mul_prime(2, 1);
  f.mul(q_power(q, m * (m - 1)));
  f.mul(eps > 0 ? qpow_minus_one(q, m) : qpow_plus_one(q, m));
  for (int i = 1; i < m; ++i) f.mul(qpow_minus_one(q, 2 * i));
  return f;
}

Factorization omega_even_order(int dim, const Int& q, int eps) {
  Factorization base = half(o_even_order(dim, q, eps));  // = SO (q odd), O/2 (q even)
  if (q % 2 == 1) return half(base);
  return base;
}

Factorization ClassicalFactor::order() const {
  switch (kind) {
    case Kind::GL: return gl_order(dim, q);
    case Kind::GU: return gu_order(dim, q);
    case Kind::Sp: return sp_order(dim, q);
    case Kind::SOPlus:
      return dim == 0 ? Factorization::one() : so_even_order(dim, q, +1);
    case Kind::SOMinus:
      return dim == 0 ? Factorization::one() : so_even_order(dim, q, -1);
    case Kind::SOOdd:
      return dim <= 1 ? Factorization::one() : so_odd_order(dim, q);
    case Kind::OPlus:
      return dim == 0 ? Factorization::one() : o_even_order(dim, q, +1);
    case Kind::OMinus:
      return dim == 0 ? Factorization::one() : o_even_order(dim, q, -1);
  }
  throw std::logic_error("bad factor kind");
}

std::string ClassicalFactor::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::GL: os << "GL" << dim; break;
    case Kind::GU: os << "GU" << dim; break;
    case Kind::Sp: os << "Sp" << dim; break;
    case Kind::SOPlus: os << "SO+" << dim; break;
    case Kind::SOMinus: os << "SO-" << dim; break;
    case Kind::SOOdd: os << "SO" << dim; break;
    case Kind::OPlus: os << "O+" << dim; break;
    case Kind::OMinus: os << "O-" << dim; break;
  }
  os << "(" << q.get_str() << ")";
  return os.str();
}

Factorization order_fact(const GroupId& g) {
  std::string why;
  if (!g.valid(&why))
    throw std::invalid_argument("invalid group " + g.str() + ": " + why);
  switch (g.family) {
    case Family::Alternating:
      return half(factorial_fact(g.dim));
    case Family::Symmetric:
      return factorial_fact(g.dim);
    case Family::Linear: {
      int n = g.dim;
      const Int& q = g.q;
      Factorization gl = g.sign > 0 ? gl_order(n, q) : gu_order(n, q);
      Factorization sl =
          div_exact(gl, g.sign > 0 ? qpow_minus_one(q, 1) : qpow_plus_one(q, 1));
      // center: gcd(n, q -+ 1)
      Int qpm1 = g.sign > 0 ? Int(q - 1) : Int(q + 1);
      Int c = gcd(Int(n), qpm1);
      return div_exact(sl, factor(c));
    }
    case Family::Symplectic: {
      Factorization sp = sp_order(g.dim, g.q);
      if (g.flavor == Flavor::Simple && g.q % 2 == 1) return half(sp);
      return sp;
    }
    case Family::OrthogonalOdd: {
      Factorization so = so_odd_order(g.dim, g.q);
      if (g.flavor == Flavor::FullIsometry) {
        so.mul_prime(2, 1);
        return so;
      }
      return half(so);  // Omega = simple for odd dim
    }
    case Family::OrthogonalEven: {
      if (g.flavor == Flavor::FullIsometry)
        return o_even_order(g.dim, g.q, g.sign);
      if (g.flavor == Flavor::Omega) return omega_even_order(g.dim, g.q, g.sign);
      // simple quotient: POmega = Omega / gcd-part
      Factorization base = half(o_even_order(g.dim, g.q, g.sign));  // SO or Omega
      Int qm;
      mpz_pow_ui(qm.get_mpz_t(), g.q.get_mpz_t(), g.dim / 2);
      Int qme = g.sign > 0 ? Int(qm - 1) : Int(qm + 1);
      Int d = gcd(Int(4), qme);
      return div_exact(base, factor(d));
    }
    case Family::G2: {
      if (g.q != 3) throw std::invalid_argument("order: only G2(3) embedded");
      Factorization f;  // q^6 (q^6-1)(q^2-1) at q = 3: 2^6 * 3^6 * 7 * 13
      f.mul_prime(2, 6);
      f.mul_prime(3, 6);
      f.mul_prime(7, 1);
      f.mul_prime(13, 1);
      return f;
    }
    case Family::Sporadic:
      return sporadic_order(g.name);
    case Family::DFI:
      return half(mul(factorial_fact(g.dim), factorial_fact(g.n2 - g.dim)));
    case Family::Parabolic: {
      const GroupId& h = *g.host;
      if (h.family == Family::OrthogonalEven) {
        // 2^6.L_4(2), nodes 1/3/4 of Omega_8^+(2)
        Factorization f = q_power(2, 6);
        f.mul(order_fact(GroupId::linear(4, 2, +1)));
        return f;
      }
      if (h.family == Family::Linear && h.sign == 1) {
        // 2^5.L_5(2), nodes 1/5 of L_6(2)
        Factorization f = q_power(2, 5);
        f.mul(order_fact(GroupId::linear(5, 2, +1)));
        return f;
      }
      // 2^4.L_2(4), node 2 of U_4(2)
      Factorization f = q_power(2, 4);
      f.mul(order_fact(GroupId::linear(2, 4, +1)));
      return f;
    }
    case Family::SubfieldSp2: {
      // Sp_2(q^2).2-type in PSp_4(q): order 2|Sp_2(q^2)| / gcd(2, q-1)
      Factorization f = sp_order(2, g.q * g.q);
      f.mul_prime(2, 1);
      if (g.q % 2 == 1) f = half(f);
      return f;
    }
  }
  throw std::logic_error("order_fact: unhandled family");
}

GroupOrder order_of(const GroupId& g) { return GroupOrder{g, order_fact(g)}; }

std::vector<Int> pi(const GroupId& g) { return order_fact(g).prime_support(); }

bool pi_equal(const GroupId& a, const GroupId& b) {
  return pi(a) == pi(b);
}

bool divides_order(const GroupId& sub, const GroupId& sup) {
  return order_fact(sub).divides(order_fact(sup));
}

std::string order_json(const GroupOrder& go) {
  nlohmann::json j;
  j["group"] = go.group.str();
  j["order"] = go.order.value.get_str();
  auto arr = nlohmann::json::array();
  for (const auto& [p, e] : go.order.factors)
    arr.push_back({p.get_str(), e});
  j["factors"] = arr;
  return j.dump();
}

}  // namespace gk
