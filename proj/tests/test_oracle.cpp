#include "doctest.h"

#include <set>
#include <sstream>

#include "gk/oracle/spectrum.hpp"
#include "gk/orders.hpp"

using namespace gk;
using namespace gk::oracle;

namespace {

std::set<uint64_t> order_set(const SpectrumReport& r) {
  return std::set<uint64_t>(r.orders.begin(), r.orders.end());
}

}  // namespace

TEST_CASE("field tables") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25}) {
    const GF& F = GF::get(q);
    CHECK(F.q == q);
    // field axioms on random triples plus inverses
    for (int a = 0; a < q; ++a) {
      if (a) CHECK(F.mul(uint8_t(a), F.inv(uint8_t(a))) == 1);
      CHECK(F.add(uint8_t(a), F.neg(uint8_t(a))) == 0);
      for (int b = 0; b < q; ++b) {
        CHECK(F.mul(uint8_t(a), uint8_t(b)) == F.mul(uint8_t(b), uint8_t(a)));
        for (int c = 0; c < std::min(q, 5); ++c) {
          uint8_t lhs = F.mul(uint8_t(a), F.add(uint8_t(b), uint8_t(c)));
          uint8_t rhs = F.add(F.mul(uint8_t(a), uint8_t(b)),
                              F.mul(uint8_t(a), uint8_t(c)));
          CHECK(lhs == rhs);
        }
      }
    }
    // frobenius is additive and fixes the prime field
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        CHECK(F.frob(F.add(uint8_t(a), uint8_t(b))) ==
              F.add(F.frob(uint8_t(a)), F.frob(uint8_t(b))));
  }
}

TEST_CASE("matrix inverse and packing") {
  const GF& F = GF::get(9);
  Mat m = Mat::identity(4);
  m.at(0, 1) = 5;
  m.at(2, 3) = 7;
  m.at(1, 0) = 2;
  Mat mi = inverse(F, m);
  CHECK(mul(F, m, mi).is_identity());
  CHECK(unpack(F, 4, pack(F, m)) == m);
  // projective normalization identifies scalar multiples
  Mat m2 = m;
  for (int i = 0; i < 16; ++i) m2.e[i] = F.mul(m2.e[i], 4);
  CHECK(pack(F, projective_normalize(F, m2)) ==
        pack(F, projective_normalize(F, m)));
}

TEST_CASE("enumerated orders match the formula orders") {
  Int bound = 5000000;
  for (auto g : {GroupId::symplectic(4, 2), GroupId::linear(2, 4),
                 GroupId::linear(2, 5), GroupId::linear(2, 7),
                 GroupId::linear(2, 11), GroupId::linear(2, 13),
                 GroupId::linear(4, 2, -1),
                 GroupId::orthogonal_even(4, 2, -1, Flavor::FullIsometry),
                 GroupId::orthogonal_even(6, 2, 1, Flavor::FullIsometry),
                 GroupId::orthogonal_even(4, 4, -1, Flavor::FullIsometry)}) {
    auto pres = build_presentation(g);
    auto group = enumerate_group(pres, bound);
    CHECK(Int((unsigned long)group.elements.size()) == order_fact(g).value);
  }
}

TEST_CASE("SL_2(11) spectrum mod center") {
  auto rep = enumerate_spectrum(build_presentation(GroupId::linear(2, 11)),
                                5000000);
  CHECK(order_set(rep) == std::set<uint64_t>{1, 2, 3, 5, 6, 11});
  CHECK(rep.group_size == 660);
}

TEST_CASE("Sp_4(2) enumeration: S_6 orders") {
  auto rep = enumerate_spectrum(build_presentation(GroupId::symplectic(4, 2)),
                                5000000);
  CHECK(rep.group_size == 720);
  CHECK(order_set(rep) == std::set<uint64_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("U_4(2) enumeration: order-5 class count and spectrum") {
  auto rep = enumerate_spectrum(build_presentation(GroupId::linear(4, 2, -1)),
                                5000000);
  CHECK(rep.group_size == 25920);
  CHECK(order_set(rep) == std::set<uint64_t>{1, 2, 3, 4, 5, 6, 9, 12});
  CHECK(rep.counts.at(5) == 5184);
}

TEST_CASE("PSp_4(3) is isomorphic to U_4(2): same spectrum data") {
  auto u = enumerate_spectrum(build_presentation(GroupId::linear(4, 2, -1)),
                              5000000);
  auto p = enumerate_spectrum(build_presentation(GroupId::symplectic(4, 3)),
                              5000000);
  CHECK(u.group_size == p.group_size);
  CHECK(u.orders == p.orders);
  CHECK(u.counts == p.counts);
}

TEST_CASE("O_4^-(2) is S_5") {
  auto rep = enumerate_spectrum(
      build_presentation(
          GroupId::orthogonal_even(4, 2, -1, Flavor::FullIsometry)),
      5000000);
  CHECK(rep.group_size == 120);
  CHECK(order_set(rep) == std::set<uint64_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("O_6^+(2) is S_8") {
  auto rep = enumerate_spectrum(
      build_presentation(
          GroupId::orthogonal_even(6, 2, 1, Flavor::FullIsometry)),
      5000000);
  CHECK(rep.group_size == 40320);
  auto s8 = cycle_type_spectrum(GroupId::symmetric(8));
  CHECK(rep.orders == s8.orders);
}

TEST_CASE("M_11 permutation enumeration") {
  auto rep = enumerate_spectrum(build_presentation(GroupId::sporadic("M11")),
                                5000000);
  CHECK(rep.group_size == 7920);
  CHECK(order_set(rep) == std::set<uint64_t>{1, 2, 3, 4, 5, 6, 8, 11});
}

TEST_CASE("alternating permutation groups match the cycle-type spectra") {
  for (int n : {5, 6, 7}) {
    auto perm = enumerate_spectrum(
        build_presentation(GroupId::alternating(n)), 5000000);
    auto dp = cycle_type_spectrum(GroupId::alternating(n));
    CHECK(perm.orders == dp.orders);
    CHECK(perm.group_size == dp.group_size);
  }
}

TEST_CASE("exact spectra are divisor-closed") {
  for (auto g : {GroupId::linear(4, 2, -1), GroupId::symplectic(4, 4)}) {
    auto rep = enumerate_spectrum(build_presentation(g), 5000000);
    for (uint64_t m : rep.orders)
      for (uint64_t d = 1; d <= m; ++d)
        if (m % d == 0) CHECK(rep.contains(d));
  }
}

TEST_CASE("rational form spectrum vs enumeration on small GL_n(2)") {
  // GL_3(2) = L_2(7), GL_4(2) = A_8
  auto l27 = enumerate_spectrum(build_presentation(GroupId::linear(2, 7)),
                                5000000);
  auto rf3 = rational_form_spectrum(3, 2);
  CHECK(l27.orders == rf3.orders);
  auto a8 = cycle_type_spectrum(GroupId::alternating(8));
  auto rf4 = rational_form_spectrum(4, 2);
  CHECK(a8.orders == rf4.orders);
  auto rf6 = rational_form_spectrum(6, 2);
  CHECK(order_set(rf6) ==
        std::set<uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 21, 28,
                           30, 31, 63});
}

TEST_CASE("sampling is deterministic, sound, and budget-0 gives {1}") {
  auto pres = build_presentation(GroupId::linear(6, 2));
  auto s0 = sample_spectrum(pres, 0, 42);
  CHECK(s0.orders == std::vector<uint64_t>{1});
  auto s1 = sample_spectrum(pres, 3000, 42);
  auto s2 = sample_spectrum(pres, 3000, 42);
  CHECK(s1.orders == s2.orders);
  CHECK(s1.witness == s2.witness);
  auto rf = rational_form_spectrum(6, 2);
  for (uint64_t m : s1.orders) CHECK(rf.contains(m));  // soundness
  // witnesses reproduce their claimed orders
  const GF& F = GF::get(2);
  for (const auto& [ord, text] : s1.witness) {
    Mat m;
    m.dim = 6;
    std::istringstream is(text);
    std::string tok;
    int idx = 0;
    while (is >> tok) {
      if (tok == ";") continue;
      std::string digits;
      for (char c : tok)
        if (isdigit((unsigned char)c)) digits += c;
      if (!digits.empty()) m.e[idx++] = uint8_t(std::stoi(digits));
    }
    REQUIRE(idx == 36);
    CHECK(element_order(F, m) == ord);
  }
}

TEST_CASE("subgroup filter: P_2 of U_4(2)") {
  auto pres = build_presentation(GroupId::linear(4, 2, -1));
  auto group = enumerate_group(pres, 5000000);
  auto [w1, w2] = u42_isotropic_plane();
  HermSpace H = make_hermitian_space(4, 4);
  const GF& F = GF::get(4);
  CHECK(H.isotropic(w1));
  CHECK(H.isotropic(w2));
  CHECK(H.h(w1, w2) == 0);
  GroupId p2 =
      GroupId::parabolic(GroupId::linear(4, 2, -1), 2);
  auto stab = [&](const Mat& m) {
    // g W = W for W = <w1, w2>
    auto in_w = [&](const std::array<uint8_t, 8>& c) {
      // W = span(e_0, e_1): membership = zero in coordinates 2,3
      return c[2] == 0 && c[3] == 0;
    };
    for (const Vec* v : {&w1, &w2}) {
      std::array<uint8_t, 8> img{};
      for (int i = 0; i < 4; ++i) {
        uint8_t acc = 0;
        for (int j = 0; j < 4; ++j) acc = F.add(acc, F.mul(m.at(i, j), v->c[j]));
        img[i] = acc;
      }
      if (!in_w(img)) return false;
    }
    return true;
  };
  auto rep = subgroup_spectrum(group, stab, p2, order_fact(p2).value);
  CHECK(rep.group_size == 960);
  // graph-relevant facts: the (2,3) edge and the isolated 5
  CHECK((rep.contains(6) || rep.contains(12)));
  CHECK(!rep.contains(10));
  CHECK(!rep.contains(15));
  CHECK(rep.contains(5));
}

TEST_CASE("presentation files round trip") {
  auto pres = build_presentation(GroupId::linear(2, 5));
  std::string path = "/tmp/gk_test_l25.pres";
  save_presentation(pres, path);
  auto loaded = load_presentation(path);
  CHECK(loaded.label == pres.label);
  CHECK(loaded.q == pres.q);
  CHECK(loaded.projective == pres.projective);
  CHECK(loaded.expected_order == pres.expected_order);
  REQUIRE(loaded.mat_gens.size() == pres.mat_gens.size());
  for (size_t i = 0; i < loaded.mat_gens.size(); ++i)
    CHECK(loaded.mat_gens[i] == pres.mat_gens[i]);
}
