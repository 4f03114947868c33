#include <doctest.h>

#include <random>

#include "clifcomp/involutions.hpp"

using namespace clifcomp;

namespace {

const Signature s30 = Signature::of(3, 0);
Multivector blade(Signature s, int i) { return Multivector::blade(s, i); }

Multivector random_mv(std::mt19937_64& rng, Signature sig) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4), coin(0, 2);
  Multivector m(sig);
  for (int i = 0; i < kDim; ++i) {
    mpq_class a(num(rng), den(rng)), b(0);
    a.canonicalize();
    if (coin(rng) == 0) {
      b = mpq_class(num(rng), den(rng));
      b.canonicalize();
    }
    m[i] = QSqrt3(a, b);
  }
  return m;
}

}  // namespace

TEST_CASE("grade-sign tables") {
  // (+,+,-,-), (+,-,+,-), (+,-,-,+), (+,-,-,-) on representative blades.
  CHECK(reversion(blade(s30, 4)) == blade(s30, 4));
  CHECK(reversion(blade(s30, 1)) == -blade(s30, 1));
  CHECK(grade_inversion(blade(s30, 4)) == -blade(s30, 4));
  CHECK(grade_inversion(blade(s30, 1)) == blade(s30, 1));
  CHECK(clifford_conjugation(blade(s30, 4)) == -blade(s30, 4));
  CHECK(clifford_conjugation(blade(s30, 7)) == blade(s30, 7));
  CHECK(full_grade_inversion(Multivector::scalar(s30, QSqrt3(1))) ==
        Multivector::scalar(s30, QSqrt3(1)));
  CHECK(full_grade_inversion(blade(s30, 1)) == -blade(s30, 1));
  CHECK(full_grade_inversion(blade(s30, 4)) == -blade(s30, 4));
  CHECK(full_grade_inversion(blade(s30, 7)) == -blade(s30, 7));
}

TEST_CASE("involutions square to the identity on every blade and signature") {
  for (const auto& sig : all_signatures())
    for (int i = 0; i < kDim; ++i)
      for (const Involution inv :
           {Involution::Reversion, Involution::GradeInversion, Involution::CliffordConjugation,
            Involution::FullGradeInversion})
        CHECK(apply_involution(apply_involution(blade(sig, i), inv), inv) == blade(sig, i));
}

TEST_CASE("homomorphism properties on all basis pairs") {
  for (const auto& sig : all_signatures())
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        const Multivector x = blade(sig, i), y = blade(sig, j);
        const Multivector xy = geometric_product(x, y);
        CHECK(reversion(xy) == geometric_product(reversion(y), reversion(x)));
        CHECK(clifford_conjugation(xy) ==
              geometric_product(clifford_conjugation(y), clifford_conjugation(x)));
        CHECK(grade_inversion(xy) ==
              geometric_product(grade_inversion(x), grade_inversion(y)));
      }
}

TEST_CASE("clifford conjugation composes reversion and grade inversion (fuzzed)") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 200; ++round) {
    const Multivector x = random_mv(rng, s30);
    CHECK(clifford_conjugation(x) == reversion(grade_inversion(x)));
    CHECK(full_grade_inversion(full_grade_inversion(x)) == x);
  }
}

TEST_CASE("n* diagonal formula") {
  CHECK(norm_star(blade(s30, 7)) == QSqrt3(1));  // l1 l2 l3
  const Multivector x = Multivector::scalar(s30, QSqrt3(1)) + blade(s30, 4);
  CHECK(norm_star(x) == QSqrt3(2));
  // Weight signature (4,4) on (2,1).
  const auto w21 = norm_star_weights(Signature::of(2, 1));
  int pos = 0, neg = 0;
  for (int v : w21) (v > 0 ? pos : neg)++;
  CHECK(pos == 4);
  CHECK(neg == 4);
}

TEST_CASE("ntilde lands in Ps and takes the expansion-oracle values") {
  // Frozen from the expansion oracle x x~; the Clifford conjugate negates
  // grade 1, so each vector blade contributes -l_i.
  CHECK(norm_tilde(blade(s30, 1)) == Multivector::scalar(s30, QSqrt3(1)));
  CHECK(norm_tilde(Multivector::scalar(s30, QSqrt3(1))) == Multivector::scalar(s30, QSqrt3(1)));
  CHECK(norm_tilde(blade(s30, 4)) == Multivector::scalar(s30, QSqrt3(-1)));
  std::mt19937_64 rng(5151);
  for (const auto& sig : all_signatures())
    for (int round = 0; round < 60; ++round)
      CHECK_NOTHROW(norm_tilde(random_mv(rng, sig)));  // always lands in Ps
}

TEST_CASE("ntilde is multiplicative on basis pairs (Ps-valued)") {
  for (const auto& sig : all_signatures())
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        const Multivector x = blade(sig, i), y = blade(sig, j);
        CHECK(norm_tilde(geometric_product(x, y)) ==
              geometric_product(norm_tilde(x), norm_tilde(y)));
      }
}

TEST_CASE("ndagger examples and equality with the n* weights") {
  CHECK(norm_dagger(blade(s30, 4)) == QSqrt3(1));
  CHECK(norm_dagger(Multivector::scalar(s30, QSqrt3(1)) + blade(s30, 4)) == QSqrt3(2));
  CHECK(norm_dagger(blade(s30, 7)) == QSqrt3(1));
  std::mt19937_64 rng(6161);
  for (const auto& sig : all_signatures())
    for (int round = 0; round < 60; ++round) {
      const Multivector x = random_mv(rng, sig);
      CHECK(norm_dagger(x) == norm_star(x));  // distinct definitions, equal forms
    }
}

TEST_CASE("nbar on Ps") {
  const Multivector one = Multivector::scalar(s30, QSqrt3(1));
  CHECK(norm_bar(one + blade(s30, 7)) == QSqrt3(2));  // 1 + l1l2l3
  CHECK(norm_bar(pseudoscalar(Signature::of(0, 3))) == QSqrt3(-1));
  CHECK(norm_bar(one) == QSqrt3(1));
  CHECK_THROWS_AS(norm_bar(blade(s30, 4)), std::invalid_argument);
}

TEST_CASE("polarization") {
  CHECK(polarize(NormId::NStar, blade(s30, 4), blade(s30, 4)) == QSqrt3(2));
  CHECK(polarize(NormId::NStar, blade(s30, 4), blade(s30, 5)) == QSqrt3(0));
  CHECK(polarize(NormId::NStar, blade(s30, 4), Multivector(s30)) == QSqrt3(0));
  std::mt19937_64 rng(7171);
  for (int round = 0; round < 60; ++round) {
    const Multivector x = random_mv(rng, s30), y = random_mv(rng, s30);
    CHECK(polarize(NormId::NStar, x, y) == polarize(NormId::NStar, y, x));
    CHECK(polarize(NormId::NStar, x, x) == QSqrt3(2) * norm_star(x));
  }
}
