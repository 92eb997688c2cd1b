#include "gk/groups.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace gk {

namespace {

bool is_prime_power(const Int& q, Int* p = nullptr, unsigned* f = nullptr) {
  if (q < 2) return false;
  Factorization fac = factor(q);
  if (fac.factors.size() != 1) return false;
  if (p) *p = fac.factors[0].first;
  if (f) *f = fac.factors[0].second;
  return true;
}

}  // namespace

GroupId GroupId::alternating(int n) {
  GroupId g;
  g.family = Family::Alternating;
  g.dim = n;
  return g;
}

GroupId GroupId::symmetric(int n) {
  GroupId g;
  g.family = Family::Symmetric;
  g.dim = n;
  return g;
}

GroupId GroupId::linear(int n, const Int& q, int sign, Flavor f) {
  GroupId g;
  g.family = Family::Linear;
  g.dim = n;
  g.q = q;
  g.sign = sign;
  g.flavor = f;
  return g;
}

GroupId GroupId::symplectic(int dim, const Int& q, Flavor f) {
  GroupId g;
  g.family = Family::Symplectic;
  g.dim = dim;
  g.q = q;
  g.flavor = f;
  return g;
}

GroupId GroupId::orthogonal_odd(int dim, const Int& q, Flavor f) {
  GroupId g;
  g.family = Family::OrthogonalOdd;
  g.dim = dim;
  g.q = q;
  g.flavor = f;
  return g;
}

GroupId GroupId::orthogonal_even(int dim, const Int& q, int sign, Flavor f) {
  GroupId g;
  g.family = Family::OrthogonalEven;
  g.dim = dim;
  g.q = q;
  g.sign = sign;
  g.flavor = f;
  return g;
}

GroupId GroupId::g2(const Int& q) {
  GroupId g;
  g.family = Family::G2;
  g.q = q;
  return g;
}

GroupId GroupId::sporadic(const std::string& name) {
  GroupId g;
  g.family = Family::Sporadic;
  g.name = name;
  return g;
}

GroupId GroupId::dfi(int k, int n) {
  GroupId g;
  g.family = Family::DFI;
  g.dim = k;
  g.n2 = n;
  return g;
}

GroupId GroupId::parabolic(const GroupId& host, int node) {
  GroupId g;
  g.family = Family::Parabolic;
  g.n2 = node;
  g.host = std::make_shared<GroupId>(host);
  return g;
}

GroupId GroupId::subfield_sp2(const Int& q) {
  GroupId g;
  g.family = Family::SubfieldSp2;
  g.q = q;
  return g;
}

GroupId GroupId::named(const std::string& label) {
  static const std::map<std::string, std::string> alias = {
      {"A5", "A(5)"},       {"A7", "A(7)"},       {"A9", "A(9)"},
      {"L2(5)", "L(2,5)"},  {"L2(11)", "L(2,11)"},{"L2(13)", "L(2,13)"},
      {"L2(4)", "L(2,4)"},  {"L2(7)", "L(2,7)"},  {"L2(25)", "L(2,25)"},
      {"M11", "M11"},       {"M22", "M22"},       {"M23", "M23"}};
  auto it = alias.find(label);
  if (it == alias.end())
    throw std::invalid_argument("unknown named subgroup label: " + label);
  return parse_group(it->second);
}

Int GroupId::characteristic() const {
  Int p;
  unsigned f;
  if (!is_prime_power(q, &p, &f))
    throw std::invalid_argument("group has no field parameter: " + str());
  return p;
}

unsigned GroupId::field_degree() const {
  Int p;
  unsigned f;
  if (!is_prime_power(q, &p, &f))
    throw std::invalid_argument("group has no field parameter: " + str());
  return f;
}

bool GroupId::operator==(const GroupId& other) const {
  if (family != other.family || dim != other.dim || n2 != other.n2 ||
      q != other.q || sign != other.sign || flavor != other.flavor ||
      name != other.name)
    return false;
  if (!host != !other.host) return false;
  if (host && !(*host == *other.host)) return false;
  return true;
}

std::string GroupId::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::Alternating:
      os << "A(" << dim << ")";
      break;
    case Family::Symmetric:
      os << "S(" << dim << ")";
      break;
    case Family::Linear:
      os << (sign >= 0 ? "L(" : "U(") << dim << "," << q.get_str() << ")";
      break;
    case Family::Symplectic:
      os << "Sp(" << dim << "," << q.get_str() << ")";
      break;
    case Family::OrthogonalOdd:
      if (flavor == Flavor::FullIsometry)
        os << "O(" << dim << "," << q.get_str() << ")";
      else
        os << "Omega(" << dim << "," << q.get_str() << ")";
      break;
    case Family::OrthogonalEven: {
      const char* s = sign > 0 ? "+" : "-";
      if (flavor == Flavor::FullIsometry)
        os << "O" << s;
      else if (flavor == Flavor::Omega)
        os << "Omega" << s;
      else
        os << (q % 2 == 0 ? "Omega" : "POmega") << s;
      os << "(" << dim << "," << q.get_str() << ")";
      break;
    }
    case Family::G2:
      os << "G2(" << q.get_str() << ")";
      break;
    case Family::Sporadic:
      os << name;
      break;
    case Family::DFI:
      os << "Sk-x-Sn-k(" << dim << "," << n2 << ")";
      break;
    case Family::Parabolic:
      os << "P" << n2 << "(" << host->str() << ")";
      break;
    case Family::SubfieldSp2:
      os << "Sp2q2(" << q.get_str() << ")";
      break;
  }
  return os.str();
}

bool GroupId::valid(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  switch (family) {
    case Family::Alternating:
      if (dim < 3) return fail("A_n needs n >= 3");
      return true;
    case Family::Symmetric:
      if (dim < 2) return fail("S_n needs n >= 2");
      return true;
    case Family::Linear:
      if (dim < 2) return fail("L/U needs dim >= 2");
      if (sign != 1 && sign != -1) return fail("linear sign must be +/-");
      if (!is_prime_power(q)) return fail("q must be a prime power");
      return true;
    case Family::Symplectic:
      if (dim < 2 || dim % 2) return fail("Sp needs even dim >= 2");
      if (flavor == Flavor::Simple && dim < 4)
        return fail("simple Sp needs dim >= 4");
      if (!is_prime_power(q)) return fail("q must be a prime power");
      return true;
    case Family::OrthogonalOdd:
      if (dim < 3 || dim % 2 == 0) return fail("odd orthogonal needs odd dim");
      if (!is_prime_power(q)) return fail("q must be a prime power");
      if (q % 2 == 0) return fail("odd-dim orthogonal groups assume q odd");
      return true;
    case Family::OrthogonalEven:
      if (dim < 4 || dim % 2) return fail("even orthogonal needs even dim >= 4");
      if (flavor == Flavor::Simple && dim < 8)
        return fail("simple POmega^eps needs dim >= 8");
      if (sign != 1 && sign != -1) return fail("orthogonal sign must be +/-");
      if (!is_prime_power(q)) return fail("q must be a prime power");
      return true;
    case Family::G2:
      if (q != 3) return fail("only G2(3) is supported");
      return true;
    case Family::Sporadic:
      return true;  // validated by the order table lookup
    case Family::DFI:
      if (!(1 < dim && dim < n2)) return fail("need 1 < k < n");
      return true;
    case Family::Parabolic: {
      if (!host) return fail("parabolic needs a host");
      const GroupId& h = *host;
      bool omega82 = h.family == Family::OrthogonalEven && h.dim == 8 &&
                     h.q == 2 && h.sign == 1;
      bool l62 = h.family == Family::Linear && h.dim == 6 && h.q == 2 &&
                 h.sign == 1;
      bool u42 = h.family == Family::Linear && h.dim == 4 && h.q == 2 &&
                 h.sign == -1;
      bool ok = (omega82 && (n2 == 1 || n2 == 3 || n2 == 4)) ||
                (l62 && (n2 == 1 || n2 == 5)) || (u42 && n2 == 2);
      if (!ok) return fail("parabolic outside the supported cases");
      return true;
    }
    case Family::SubfieldSp2:
      if (!is_prime_power(q)) return fail("q must be a prime power");
      return true;
  }
  return fail("unknown family");
}

GroupId canonicalize(const GroupId& g0) {
  GroupId g = g0;
  // resolve q-even odd-dim orthogonal defensively (isomorphic to symplectic)
  for (int step = 0; step < 8; ++step) {
    if (g.family == Family::Parabolic) {
      GroupId h = canonicalize(*g.host);
      if (!(h == *g.host)) g.host = std::make_shared<GroupId>(h);
      return g;
    }
    // for even q the Omega flavor already is the simple group
    if (g.flavor == Flavor::Omega &&
        (g.family == Family::OrthogonalEven ||
         g.family == Family::Symplectic) &&
        g.q % 2 == 0)
      g.flavor = Flavor::Simple;
    if (g.family == Family::Symplectic && g.flavor == Flavor::FullIsometry)
      g.flavor = g.q % 2 == 0 ? Flavor::Simple : Flavor::Omega;  // O = Sp
    if (g.flavor != Flavor::Simple) return g;
    GroupId next = g;
    if (g.family == Family::OrthogonalOdd && g.dim == 3)
      next = GroupId::linear(2, g.q, +1);
    else if (g.family == Family::OrthogonalOdd && g.dim == 5)
      next = GroupId::symplectic(4, g.q);
    else if (g.family == Family::OrthogonalEven && g.dim == 6)
      next = GroupId::linear(4, g.q, g.sign);
    else if (g.family == Family::OrthogonalEven && g.dim == 4 && g.sign == -1)
      next = GroupId::linear(2, g.q * g.q, +1);
    else if (g.family == Family::Symplectic && g.dim == 2)
      next = GroupId::linear(2, g.q, +1);
    else if (g.family == Family::Symplectic && g.dim == 4 && g.q == 3)
      next = GroupId::linear(4, 2, -1);  // PSp_4(3) = U_4(2)
    else if (g.family == Family::Linear && g.dim == 2 && g.q == 4)
      next = GroupId::alternating(5);
    else if (g.family == Family::Linear && g.dim == 2 && g.q == 5)
      next = GroupId::alternating(5);
    else if (g.family == Family::Linear && g.dim == 2 && g.q == 9)
      next = GroupId::alternating(6);
    else if (g.family == Family::Linear && g.dim == 4 && g.q == 2 &&
             g.sign == 1)
      next = GroupId::alternating(8);
    else if (g.family == Family::Linear && g.dim == 2 && g.sign == -1)
      next = GroupId::linear(2, g.q, +1);
    else if (g.family == Family::DFI && g.n2 - g.dim == 1)
      next = GroupId::alternating(g.dim);
    if (next == g) return g;
    g = next;
  }
  return g;
}

// ---- parser -------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw GroupParseError(std::string("expected '") + c + "'", pos);
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) throw GroupParseError("expected integer", pos);
    return std::stol(s.substr(start, pos - start));
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos]) || s[pos] == '+' ||
            s[pos] == '-' || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  GroupId group() {
    skip_ws();
    size_t start = pos;
    // Sk-x-Sn-k special form
    if (s.compare(pos, 10, "Sk-x-Sn-k(") == 0) {
      pos += 9;
      expect('(');
      long k = integer();
      expect(',');
      long n = integer();
      expect(')');
      return GroupId::dfi((int)k, (int)n);
    }
    std::string head = ident();
    if (head.empty()) throw GroupParseError("expected group name", pos);
    // parabolic P1(...)
    if (head.size() == 2 && head[0] == 'P' && std::isdigit((unsigned char)head[1])) {
      expect('(');
      GroupId h = group();
      expect(')');
      return GroupId::parabolic(h, head[1] - '0');
    }
    auto args = [&]() {
      std::vector<long> v;
      expect('(');
      v.push_back(integer());
      while (eat(',')) v.push_back(integer());
      expect(')');
      return v;
    };
    auto need = [&](const std::vector<long>& v, size_t k) {
      if (v.size() != k)
        throw GroupParseError("wrong argument count for " + head, start);
    };
    if (head == "A") {
      auto v = args();
      need(v, 1);
      return GroupId::alternating((int)v[0]);
    }
    if (head == "S") {
      auto v = args();
      need(v, 1);
      return GroupId::symmetric((int)v[0]);
    }
    if (head == "L" || head == "PSL" || head == "SL") {
      auto v = args();
      need(v, 2);
      return GroupId::linear((int)v[0], v[1], +1);
    }
    if (head == "U" || head == "PSU" || head == "SU") {
      auto v = args();
      need(v, 2);
      return GroupId::linear((int)v[0], v[1], -1);
    }
    if (head == "Sp" || head == "PSp") {
      auto v = args();
      need(v, 2);
      return GroupId::symplectic((int)v[0], v[1]);
    }
    if (head == "Sp2q2") {
      auto v = args();
      need(v, 1);
      return GroupId::subfield_sp2(v[0]);
    }
    if (head == "G2") {
      auto v = args();
      need(v, 1);
      return GroupId::g2(v[0]);
    }
    if (head == "O+" || head == "O-") {
      auto v = args();
      need(v, 2);
      return GroupId::orthogonal_even((int)v[0], v[1], head[1] == '+' ? 1 : -1,
                                      Flavor::FullIsometry);
    }
    if (head == "O") {
      auto v = args();
      need(v, 2);
      return GroupId::orthogonal_odd((int)v[0], v[1], Flavor::FullIsometry);
    }
    if (head == "Omega+" || head == "Omega-") {
      auto v = args();
      need(v, 2);
      int sg = head.back() == '+' ? 1 : -1;
      // for even q, Omega is already the simple group
      Flavor f = (v[1] % 2 == 0) ? Flavor::Simple : Flavor::Omega;
      return GroupId::orthogonal_even((int)v[0], v[1], sg, f);
    }
    if (head == "POmega+" || head == "POmega-") {
      auto v = args();
      need(v, 2);
      return GroupId::orthogonal_even((int)v[0], v[1],
                                      head[6] == '+' ? 1 : -1, Flavor::Simple);
    }
    if (head == "Omega") {
      auto v = args();
      need(v, 2);
      return GroupId::orthogonal_odd((int)v[0], v[1]);
    }
    // bare names: sporadics and friends
    static const std::map<std::string, int> sporadics = {
        {"M11", 0}, {"M12", 0}, {"M22", 0}, {"M23", 0}, {"M24", 0},
        {"HS", 0},  {"McL", 0}, {"Co2", 0}, {"Co3", 0}, {"TF42", 0}};
    if (sporadics.count(head)) return GroupId::sporadic(head);
    throw GroupParseError("unknown group name '" + head + "'", start);
  }
};

}  // namespace

GroupId parse_group(const std::string& spec) {
  Parser p(spec);
  GroupId g = p.group();
  p.skip_ws();
  if (p.pos != spec.size())
    throw GroupParseError("trailing input", p.pos);
  std::string why;
  if (!g.valid(&why)) throw GroupParseError(why, 0);
  return g;
}

}  // namespace gk
