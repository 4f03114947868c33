#include <doctest.h>

#include "clifcomp/clifford.hpp"

using namespace clifcomp;

namespace {

Multivector blade(Signature s, int i) { return Multivector::blade(s, i); }
const Signature s30 = Signature::of(3, 0);

}  // namespace

TEST_CASE("squared relations e_i^2 = l_i and (e1e2e3)^2 = -l1l2l3") {
  for (const auto& sig : all_signatures()) {
    for (int gen = 0; gen < 3; ++gen) {
      const int idx = 4 + gen;  // e1, e2, e3
      const auto bp = blade_product(idx, idx, sig);
      CHECK(bp.paper_idx == kScalarIdx);
      CHECK(bp.sign == sig.l(gen));
    }
    const auto ps = blade_product(kPseudoIdx, kPseudoIdx, sig);
    CHECK(ps.paper_idx == kScalarIdx);
    CHECK(ps.sign == -sig.lambda_product());
    // (e_i e_j)^2 = -l_i l_j for the three bivectors.
    CHECK(blade_product(1, 1, sig).sign == -sig.l(0) * sig.l(1));
    CHECK(blade_product(2, 2, sig).sign == -sig.l(1) * sig.l(2));
    CHECK(blade_product(3, 3, sig).sign == -sig.l(0) * sig.l(2));
  }
}

TEST_CASE("bivector relations hold verbatim in every signature") {
  for (const auto& sig : all_signatures()) {
    const auto r1 = blade_product(1, 2, sig);  // (e1e2)(e2e3) = l2 e1e3
    CHECK(r1.paper_idx == 3);
    CHECK(r1.sign == sig.l(1));
    const auto r2 = blade_product(2, 3, sig);  // (e2e3)(e1e3) = l3 e1e2
    CHECK(r2.paper_idx == 1);
    CHECK(r2.sign == sig.l(2));
    const auto r3 = blade_product(3, 1, sig);  // (e1e3)(e1e2) = l1 e2e3
    CHECK(r3.paper_idx == 2);
    CHECK(r3.sign == sig.l(0));
  }
}

TEST_CASE("geometric product basics") {
  const Multivector x = blade(s30, 4) + blade(s30, 1);  // e1 + e12
  CHECK(geometric_product(Multivector::scalar(s30, QSqrt3(1)), x) == x);
  CHECK(geometric_product(blade(s30, 4), blade(s30, 5)) == blade(s30, 1));  // e1 e2 = e12

  // (1+e1)(1-e1) = 0: a zero-divisor witness.
  const Multivector one = Multivector::scalar(s30, QSqrt3(1));
  CHECK(geometric_product(one + blade(s30, 4), one - blade(s30, 4)).is_zero());
}

TEST_CASE("signature mismatch is an error") {
  const Multivector a = blade(Signature::of(3, 0), 4);
  const Multivector b = blade(Signature::of(2, 1), 4);
  CHECK_THROWS_AS(geometric_product(a, b), std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("associativity on all basis triples in all four signatures") {
  for (const auto& sig : all_signatures())
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) {
          const Multivector a = blade(sig, i), b = blade(sig, j), c = blade(sig, k);
          CHECK(geometric_product(geometric_product(a, b), c) ==
                geometric_product(a, geometric_product(b, c)));
        }
}

TEST_CASE("grade projection partitions") {
  const Multivector x = Multivector::scalar(s30, QSqrt3(1)) + blade(s30, 4) + blade(s30, 1);
  CHECK(grade_project(x, 1) == blade(s30, 4));
  CHECK(grade_project(blade(s30, 7), 3) == blade(s30, 7));
  Multivector sum(s30);
  for (int k = 0; k <= 3; ++k) sum += grade_project(x, k);
  CHECK(sum == x);
}

TEST_CASE("even/odd split") {
  const Multivector one = Multivector::scalar(s30, QSqrt3(1));
  auto [p, m] = even_odd_split(one + blade(s30, 4));
  CHECK(p == one);
  CHECK(m == blade(s30, 4));
  auto [p2, m2] = even_odd_split(blade(s30, 1));
  CHECK(p2 == blade(s30, 1));
  CHECK(m2.is_zero());
  auto [p3, m3] = even_odd_split(blade(s30, 7));
  CHECK(p3.is_zero());
  CHECK(m3 == blade(s30, 7));
}

TEST_CASE("pseudoscalar split") {
  const Multivector one = Multivector::scalar(s30, QSqrt3(1));
  const QSqrt3 half = QSqrt3::rational(1, 2);
  auto [cp, cm] = pseudoscalar_split(one);
  Multivector cplus = Multivector::scalar(s30, half);
  cplus[kPseudoIdx] = half;
  Multivector cminus = Multivector::scalar(s30, half);
  cminus[kPseudoIdx] = -half;
  CHECK(cp == cplus);
  CHECK(cm == cminus);

  auto [e1p, e1m] = pseudoscalar_split(blade(s30, 4));
  Multivector want_p(s30), want_m(s30);
  want_p[4] = half;  // (e1 + e23)/2
  want_p[2] = half;
  want_m[4] = half;  // (e1 - e23)/2
  want_m[2] = -half;
  CHECK(e1p == want_p);
  CHECK(e1m == want_m);

  for (const auto& sig : all_signatures())
    for (int i = 0; i < 8; ++i) {
      auto [a, b] = pseudoscalar_split(blade(sig, i));
      CHECK(a + b == blade(sig, i));
    }
}

TEST_CASE("pseudoscalar is central; c^2 = -l1l2l3; c+- idempotent iff split") {
  for (const auto& sig : all_signatures()) {
    const Multivector c = pseudoscalar(sig);
    for (int i = 0; i < 8; ++i)
      CHECK(geometric_product(c, blade(sig, i)) == geometric_product(blade(sig, i), c));
    CHECK(geometric_product(c, c) ==
          Multivector::scalar(sig, QSqrt3(-sig.lambda_product())));
    const QSqrt3 half = QSqrt3::rational(1, 2);
    Multivector cplus = Multivector::scalar(sig, half);
    cplus[kPseudoIdx] = half;
    const bool idem = geometric_product(cplus, cplus) == cplus;
    CHECK(idem == (sig.lambda_product() == -1));
  }
}

TEST_CASE("Rot and Ps are closed subalgebras") {
  for (const auto& sig : all_signatures()) {
    for (int i : rot_basis_indices())
      for (int j : rot_basis_indices())
        CHECK(subalgebra_membership(geometric_product(blade(sig, i), blade(sig, j)),
                                    Subalgebra::Rot));
    for (int i : ps_basis_indices())
      for (int j : ps_basis_indices())
        CHECK(subalgebra_membership(geometric_product(blade(sig, i), blade(sig, j)),
                                    Subalgebra::Ps));
  }
}

TEST_CASE("membership examples") {
  const Multivector one = Multivector::scalar(s30, QSqrt3(1));
  CHECK(subalgebra_membership(one + blade(s30, 1), Subalgebra::Rot));
  CHECK(!subalgebra_membership(blade(s30, 4), Subalgebra::Rot));
  CHECK(subalgebra_membership(one + blade(s30, 7), Subalgebra::Ps));
  CHECK(!subalgebra_membership(blade(s30, 1), Subalgebra::Ps));
}
