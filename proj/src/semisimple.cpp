#include "gk/semisimple.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gk {

namespace {

bool is_classical_host(const GroupId& g) {
  return g.family == Family::Symplectic || g.family == Family::OrthogonalOdd ||
         g.family == Family::OrthogonalEven;
}

// multiplicative order of q mod r, scanning only up to the module dimension;
// 0 if the order exceeds it
unsigned order_upto(const Int& q, const Int& r, unsigned nmax) {
  Int t = q % r;
  for (unsigned k = 1; k <= nmax; ++k) {
    if (t == 1) return k;
    t = t * q % r;
  }
  return 0;
}

// all descending multisets of positive parts with given total budget and
// at most max_parts parts
void partitions_upto(unsigned budget, const Int& max_parts,
                     std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left,
                                                    unsigned max_val) {
    if (!cur.empty()) out.push_back(cur);
    if (left == 0) return;
    if (Int((unsigned long)cur.size()) >= max_parts) return;
    for (unsigned v = std::min(left, max_val); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(budget, budget);
}

// number of ways to place the multiset onto `slots` labeled slots
Int count_assignments(const std::vector<unsigned>& multiset, const Int& slots) {
  Int total = 1;
  Int remaining = slots;
  size_t i = 0;
  while (i < multiset.size()) {
    size_t j = i;
    while (j < multiset.size() && multiset[j] == multiset[i]) ++j;
    unsigned count = unsigned(j - i);
    Int binom;
    mpz_bin_ui(binom.get_mpz_t(), remaining.get_mpz_t(), count);
    total *= binom;
    remaining -= count;
    i = j;
  }
  return total;
}

}  // namespace

unsigned ClassTuple::sum_a() const {
  unsigned s = 0;
  for (unsigned v : a) s += v;
  if (i % 2 == 1) s *= 2;  // mirrored pairs
  return s;
}

unsigned ClassTuple::block_dims() const { return i * sum_a(); }

std::string ClassTuple::str() const {
  std::ostringstream os;
  os << "r=" << r.get_str() << " i=" << i << " a=[";
  for (size_t k = 0; k < a.size(); ++k) os << (k ? "," : "") << a[k];
  os << "] ell=" << ell;
  if (eps_prime) os << " eps'=" << (eps_prime > 0 ? "+" : "-");
  return os.str();
}

std::vector<ClassTuple> enumerate_classes(const GroupId& host, const Int& r) {
  if (!is_classical_host(host))
    throw std::invalid_argument("enumerate_classes: not a symplectic/orthogonal host");
  if (r == 2 || !is_prime(r))
    throw std::invalid_argument("enumerate_classes: r must be an odd prime");
  Int p = host.characteristic();
  if (r == p)
    throw std::invalid_argument("enumerate_classes: r = p is handled by the certificate tier");

  unsigned n = unsigned(host.dim);
  const Int& q = host.q;
  std::vector<ClassTuple> out;

  unsigned i = order_upto(q, r, n);
  if (i == 0) return out;
  bool odd_i = (i % 2 == 1);
  unsigned unit = odd_i ? 2 * i : i;  // dimensions per multiplicity unit
  unsigned budget = n / unit;
  if (budget == 0) return out;
  Int t = (r - 1) / i;
  Int slots = odd_i ? Int(t / 2) : t;

  std::vector<std::vector<unsigned>> multisets;
  partitions_upto(budget, slots, multisets);

  for (const auto& ms : multisets) {
    unsigned half_sum = 0;
    for (unsigned v : ms) half_sum += v;
    unsigned sum = odd_i ? 2 * half_sum : half_sum;
    unsigned ell = n - unit * half_sum;

    ClassTuple ct;
    ct.host = host;
    ct.r = r;
    ct.i = i;
    ct.t = t;
    ct.a = ms;
    ct.ell = ell;
    ct.eps_prime = 0;
    ct.assignments = count_assignments(ms, slots);

    if (host.family == Family::Symplectic) {
      out.push_back(std::move(ct));
      continue;
    }
    if (host.family == Family::OrthogonalOdd) {
      // ell stays odd and positive automatically
      out.push_back(std::move(ct));
      continue;
    }
    // even-dimensional orthogonal: sign bookkeeping
    int eps = host.sign;
    int block_sign = odd_i ? +1 : (sum % 2 ? -1 : +1);
    if (ell == 0) {
      if (block_sign != eps) continue;  // no such class
      ct.eps_prime = 0;
      out.push_back(std::move(ct));
    } else {
      ct.eps_prime = eps * block_sign;
      out.push_back(std::move(ct));
    }
  }

  std::sort(out.begin(), out.end(), [](const ClassTuple& x, const ClassTuple& y) {
    if (x.sum_a() != y.sum_a()) return x.sum_a() < y.sum_a();
    return x.a < y.a;
  });
  return out;
}

CentralizerOrder centralizer_order(const ClassTuple& tuple) {
  const GroupId& host = tuple.host;
  const Int& q = host.q;
  bool q_even = (q % 2 == 0);
  CentralizerOrder co;
  co.tuple = tuple;

  // fixed-space factor
  if (tuple.ell > 0) {
    if (host.family == Family::Symplectic) {
      if (tuple.ell >= 2)
        co.chain.push_back({ClassicalFactor::Kind::Sp, int(tuple.ell), q});
    } else if (host.family == Family::OrthogonalOdd) {
      if (tuple.ell >= 3)
        co.chain.push_back({ClassicalFactor::Kind::SOOdd, int(tuple.ell), q});
    } else {
      auto kind = [&](int eps) {
        if (q_even)
          return eps > 0 ? ClassicalFactor::Kind::OPlus
                         : ClassicalFactor::Kind::OMinus;
        return eps > 0 ? ClassicalFactor::Kind::SOPlus
                       : ClassicalFactor::Kind::SOMinus;
      };
      co.chain.push_back({kind(tuple.eps_prime), int(tuple.ell), q});
    }
  }
  // block factors
  bool odd_i = tuple.i % 2 == 1;
  Int qi;
  mpz_pow_ui(qi.get_mpz_t(), q.get_mpz_t(), odd_i ? tuple.i : tuple.i / 2);
  for (unsigned v : tuple.a)
    co.chain.push_back({odd_i ? ClassicalFactor::Kind::GL
                              : ClassicalFactor::Kind::GU,
                        int(v), qi});

  co.raw_product = Factorization::one();
  for (const auto& f : co.chain) co.raw_product.mul(f.order());
  co.odd_part = co.raw_product.odd_part();

  long v2 = long(co.raw_product.two_part());
  if (host.family == Family::Symplectic) {
    long a = q_even ? 0 : 1;
    co.two_lower = co.two_upper = v2 - a;
  } else if (host.flavor == Flavor::FullIsometry) {
    co.two_lower = v2 - 2;
    co.two_upper = v2 + (q_even ? 1 : 2);
  } else {
    co.two_lower = v2 - 2;
    co.two_upper = v2;
  }
  if (co.two_lower < 0) co.two_lower = 0;
  return co;
}

Factorization CentralizerOrder::exact_order() const {
  if (!two_exact())
    throw std::logic_error("centralizer 2-part not exact for this host");
  Factorization f = odd_part;
  if (two_upper > 0) f.mul_prime(2, unsigned(two_upper));
  return f;
}

SemisimpleDecision adjacent_semisimple(const GroupId& host, const Int& r,
                                       const Int& s) {
  SemisimpleDecision d;
  d.r = r;
  d.s = s;
  if (r == s) throw std::invalid_argument("adjacent_semisimple: r = s");
  auto tuples = enumerate_classes(host, r);
  if (tuples.empty())
    throw std::invalid_argument("adjacent_semisimple: r does not divide |host|");

  if (s != 2) {
    for (const auto& t : tuples) {
      CentralizerOrder co = centralizer_order(t);
      if (co.odd_part.is_divisible_by_prime(s)) {
        d.status = EdgeStatus::Present;
        d.witness = t;
        for (const auto& f : co.chain)
          if (f.order().is_divisible_by_prime(s)) {
            d.divisor_factor = f.str();
            break;
          }
        return d;
      }
    }
    d.status = EdgeStatus::Absent;
    d.exhausted = tuples;
    return d;
  }

  // s = 2: only the bracketed 2-part is available
  bool all_below = true;
  for (const auto& t : tuples) {
    CentralizerOrder co = centralizer_order(t);
    if (co.two_lower >= 1) {
      d.status = EdgeStatus::Present;
      d.witness = t;
      d.divisor_factor = "2-part lower bound";
      return d;
    }
    if (co.two_upper >= 1) all_below = false;
  }
  if (all_below) {
    d.status = EdgeStatus::Absent;
    d.exhausted = tuples;
    return d;
  }
  d.status = EdgeStatus::Unknown;
  return d;
}

Factorization n_bound(const GroupId& host, unsigned i) {
  const Int& q = host.q;
  auto fail = [&]() -> Factorization {
    throw std::invalid_argument("n_bound: host/i outside the fixed table");
  };
  if (host.family == Family::Symplectic && host.dim == 8) {
    switch (i) {
      case 8: return factor(Int(q * q * q * q + 1));
      case 4: return factor(Int(q * q * q * q - 1));
      case 3: return mul(factor(Int(q + 1)), factor(Int(q * q * q - 1)));
      case 6: return mul(factor(Int(q - 1)), factor(Int(q * q * q + 1)));
      case 1:
      case 2:
        return mul(factor(Int(q * q + 1)),
                   factor(Int(q * q * q * q * q * q - 1)));
      default: return fail();
    }
  }
  if (host.family == Family::OrthogonalEven && host.dim == 8 &&
      host.sign == 1) {
    switch (i) {
      case 4: return factor(Int(q * q * q * q - 1));
      case 3: return factor(Int(q * q * q - 1));
      case 6: return factor(Int(q * q * q + 1));
      case 1:
        return mul(factor(Int(q * q * q * q - 1)),
                   factor(Int(q * q * q - 1)));
      case 2:
        return mul(factor(Int(q * q * q * q - 1)),
                   factor(Int(q * q * q + 1)));
      default: return fail();
    }
  }
  if (host.family == Family::Symplectic && host.dim == 4) {
    switch (i) {
      case 4: return factor(Int(q * q + 1));
      case 1:
      case 2: return factor(Int(q * q - 1));
      default: return fail();
    }
  }
  return fail();
}

}  // namespace gk
