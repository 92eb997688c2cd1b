#include "gk/oracle/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "gk/altgraph.hpp"
#include "gk/orders.hpp"

namespace gk::oracle {

namespace {

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t hash_u128(u128 k) {
  uint64_t lo = uint64_t(k), hi = uint64_t(k >> 64);
  uint64_t s = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
  return splitmix(s);
}

/// Open-addressing set of packed keys; the all-ones key never occurs
/// (keys are < q^(d^2) <= 2^127 - 1).
class KeySet {
 public:
  explicit KeySet(uint64_t expected) {
    uint64_t want = std::max<uint64_t>(64, expected + expected / 2);
    cap_ = 1;
    while (cap_ < want) cap_ <<= 1;
    slots_.assign(cap_, kEmpty);
  }

  bool insert(u128 key) {
    uint64_t idx = hash_u128(key) & (cap_ - 1);
    for (;;) {
      u128 cur = slots_[idx];
      if (cur == key) return false;
      if (cur == kEmpty) {
        slots_[idx] = key;
        ++size_;
        return true;
      }
      idx = (idx + 1) & (cap_ - 1);
    }
  }

  uint64_t size() const { return size_; }
  bool needs_growth() const { return size_ * 4 >= cap_ * 3; }

  void grow() {
    std::vector<u128> old;
    old.swap(slots_);
    cap_ <<= 1;
    slots_.assign(cap_, kEmpty);
    uint64_t n = size_;
    size_ = 0;
    for (u128 k : old)
      if (k != kEmpty) insert(k);
    (void)n;
  }

 private:
  static constexpr u128 kEmpty = ~(u128)0;
  std::vector<u128> slots_;
  uint64_t cap_ = 0, size_ = 0;
};

Mat canonical(const Presentation& p, const GF& F, const Mat& m) {
  return p.projective ? projective_normalize(F, m) : m;
}

}  // namespace

bool SpectrumReport::contains(uint64_t m) const {
  return std::binary_search(orders.begin(), orders.end(), m);
}

std::string SpectrumReport::to_json() const {
  std::ostringstream os;
  os << "{\"group\":\"" << label.str() << "\",\"mode\":\"";
  switch (mode) {
    case Mode::ExactEnum: os << "exact-enumeration"; break;
    case Mode::CycleType: os << "cycle-type-exact"; break;
    case Mode::RationalForm: os << "rational-form-exact"; break;
    case Mode::Sampled: os << "sampled"; break;
  }
  os << "\",\"orders\":[";
  for (size_t i = 0; i < orders.size(); ++i)
    os << (i ? "," : "") << orders[i];
  os << "]";
  if (group_size != 0) os << ",\"size\":\"" << group_size.get_str() << "\"";
  if (mode == Mode::Sampled)
    os << ",\"samples\":" << samples << ",\"budget\":" << budget
       << ",\"seed\":" << seed;
  if (!counts.empty()) {
    os << ",\"order_counts\":{";
    bool first = true;
    for (const auto& [o, c] : counts) {
      os << (first ? "" : ",") << "\"" << o << "\":" << c;
      first = false;
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

EnumeratedGroup enumerate_group(const Presentation& pres, const Int& bound) {
  if (pres.expected_order == 0)
    throw std::invalid_argument("presentation " + pres.label.str() +
                                " is sampling-only");
  if (pres.expected_order > bound)
    throw std::invalid_argument("enumeration bound exceeded for " +
                                pres.label.str());
  if (pres.is_perm) {
    EnumeratedGroup out;
    out.pres = pres;
    KeySet seen(pres.expected_order.get_ui());
    std::vector<Perm> frontier = {Perm::identity(pres.dim)};
    seen.insert(pack(frontier[0]));
    out.elements.push_back(pack(frontier[0]));
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& x : frontier) {
        for (const Perm& g : pres.perm_gens) {
          Perm y = mul(g, x);
          if (seen.insert(pack(y))) {
            next.push_back(y);
            out.elements.push_back(pack(y));
          }
        }
      }
      frontier.swap(next);
    }
    if (Int((unsigned long)out.elements.size()) != pres.expected_order)
      throw std::logic_error("closure size mismatch for " + pres.label.str());
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }

  const GF& F = pres.field();
  EnumeratedGroup out;
  out.pres = pres;
  uint64_t expect = pres.expected_order.get_ui();
  KeySet seen(expect);
  Mat id = Mat::identity(pres.dim);
  std::vector<u128> frontier = {pack(F, id)};
  seen.insert(frontier[0]);
  out.elements.push_back(frontier[0]);
  std::vector<u128> next;
  while (!frontier.empty()) {
    next.clear();
    for (u128 key : frontier) {
      Mat x = unpack(F, pres.dim, key);
      for (const Mat& g : pres.mat_gens) {
        Mat y = canonical(pres, F, mul(F, g, x));
        u128 k2 = pack(F, y);
        if (seen.insert(k2)) {
          next.push_back(k2);
          out.elements.push_back(k2);
          if (out.elements.size() > expect)
            throw std::logic_error("closure exceeds the expected order of " +
                                   pres.label.str());
        }
      }
    }
    frontier.swap(next);
  }
  if (Int((unsigned long)out.elements.size()) != pres.expected_order)
    throw std::logic_error("closure size mismatch for " + pres.label.str());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

unsigned presentation_element_order(const Presentation& pres, const Mat& m) {
  const GF& F = pres.field();
  return pres.projective ? coset_order(F, m) : element_order(F, m);
}

SpectrumReport spectrum_of(const EnumeratedGroup& g) {
  SpectrumReport rep;
  rep.label = g.pres.label;
  rep.mode = SpectrumReport::Mode::ExactEnum;
  rep.group_size = Int((unsigned long)g.elements.size());
  if (g.pres.is_perm) {
    for (u128 key : g.elements) {
      Perm p;
      p.n = uint8_t(g.pres.dim);
      u128 k = key;
      for (int i = 0; i < g.pres.dim; ++i) {
        p.img[i] = uint8_t(k % 16);
        k /= 16;
      }
      rep.counts[element_order(p)]++;
    }
  } else {
    const GF& F = g.pres.field();
    for (u128 key : g.elements) {
      Mat m = unpack(F, g.pres.dim, key);
      rep.counts[presentation_element_order(g.pres, m)]++;
    }
  }
  for (const auto& [o, c] : rep.counts) rep.orders.push_back(o);
  return rep;
}

SpectrumReport enumerate_spectrum(const Presentation& pres, const Int& bound) {
  return spectrum_of(enumerate_group(pres, bound));
}

SpectrumReport subgroup_spectrum(const EnumeratedGroup& g,
                                 const std::function<bool(const Mat&)>& pred,
                                 const GroupId& label, const Int& expected) {
  if (g.pres.is_perm)
    throw std::invalid_argument("subgroup_spectrum: matrix groups only");
  const GF& F = g.pres.field();
  SpectrumReport rep;
  rep.label = label;
  rep.mode = SpectrumReport::Mode::ExactEnum;
  uint64_t size = 0;
  for (u128 key : g.elements) {
    Mat m = unpack(F, g.pres.dim, key);
    if (!pred(m)) continue;
    ++size;
    rep.counts[presentation_element_order(g.pres, m)]++;
  }
  rep.group_size = Int((unsigned long)size);
  if (expected != 0 && rep.group_size != expected)
    throw std::logic_error("subgroup filter size mismatch for " + label.str());
  for (const auto& [o, c] : rep.counts) rep.orders.push_back(o);
  return rep;
}

SpectrumReport sample_spectrum(const Presentation& pres, uint64_t budget,
                               uint64_t seed) {
  if (pres.is_perm)
    throw std::invalid_argument("sample_spectrum: matrix presentations only");
  const GF& F = pres.field();
  SpectrumReport rep;
  rep.label = pres.label;
  rep.mode = SpectrumReport::Mode::Sampled;
  rep.budget = budget;
  rep.seed = seed;

  std::set<uint64_t> orders;
  if (budget == 0) {
    rep.orders = {1};
    rep.samples = 0;
    return rep;
  }

  // product replacement: a tuple of generators mutated by random one-sided
  // multiplications (with inverses), after a fixed burn-in
  std::mt19937_64 rng(seed);
  std::vector<Mat> slots;
  while (slots.size() < std::max<size_t>(10, 2 * pres.mat_gens.size()))
    slots.push_back(pres.mat_gens[slots.size() % pres.mat_gens.size()]);
  auto step = [&]() -> const Mat& {
    size_t i = rng() % slots.size();
    size_t j = rng() % slots.size();
    while (j == i) j = rng() % slots.size();
    bool use_inv = rng() & 1;
    bool left = rng() & 1;
    Mat other = use_inv ? inverse(F, slots[j]) : slots[j];
    slots[i] = left ? mul(F, other, slots[i]) : mul(F, slots[i], other);
    return slots[i];
  };
  for (int burn = 0; burn < 256; ++burn) step();
  for (uint64_t it = 0; it < budget; ++it) {
    const Mat& x = step();
    unsigned ord = presentation_element_order(pres, x);
    if (orders.insert(ord).second)
      rep.witness[ord] = x.str(F);
  }
  orders.insert(1);
  rep.orders.assign(orders.begin(), orders.end());
  rep.samples = budget;
  return rep;
}

SpectrumReport cycle_type_spectrum(const GroupId& g) {
  SpectrumReport rep;
  rep.label = g;
  rep.mode = SpectrumReport::Mode::CycleType;
  std::vector<uint64_t> orders;
  if (g.family == Family::Alternating)
    orders = permutation_spectrum(g.dim, SignConstraint::Even);
  else if (g.family == Family::Symmetric)
    orders = permutation_spectrum(g.dim, SignConstraint::Any);
  else if (g.family == Family::DFI)
    orders = dfi_spectrum(g.dim, g.n2);
  else
    throw std::invalid_argument("cycle_type_spectrum: " + g.str());
  rep.orders = orders;
  rep.group_size = order_fact(g).value;
  return rep;
}

SpectrumReport rational_form_spectrum(int n, int q) {
  if (q != 2)
    throw std::invalid_argument(
        "rational_form_spectrum: shipped for q = 2 (SL = GL = PSL)");
  SpectrumReport rep;
  rep.label = GroupId::linear(n, q, +1);
  rep.mode = SpectrumReport::Mode::RationalForm;
  rep.group_size = order_fact(rep.label).value;

  // semisimple orders by irreducible degree: e | q^d - 1 with ord_e(q) = d
  std::vector<std::vector<uint64_t>> by_degree(n + 1);
  for (int d = 1; d <= n; ++d) {
    uint64_t m = (1ULL << d) - 1;
    for (uint64_t e = 1; e <= m; ++e) {
      if (m % e) continue;
      if (e == 1) {
        if (d == 1) by_degree[d].push_back(1);
        continue;
      }
      unsigned o = 1;
      uint64_t t = 2 % e;
      while (t != 1) {
        t = t * 2 % e;
        ++o;
      }
      if (o == unsigned(d)) by_degree[d].push_back(e);
    }
  }
  auto p_lift = [&](uint64_t k) {  // 2^ceil(log2 k)
    uint64_t v = 1;
    while (v < k) v <<= 1;
    return v;
  };
  std::set<uint64_t> out;
  std::function<void(int, uint64_t)> rec = [&](int left, uint64_t cur) {
    out.insert(cur);
    for (int d = 1; d <= left; ++d)
      for (uint64_t e : by_degree[d])
        for (int k = 1; k * d <= left; ++k)
          rec(left - d * k, std::lcm(cur, e * p_lift(uint64_t(k))));
  };
  rec(n, 1);
  rep.orders.assign(out.begin(), out.end());
  return rep;
}

}  // namespace gk::oracle
