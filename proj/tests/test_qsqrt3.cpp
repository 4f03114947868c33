#include <doctest.h>

#include <cmath>
#include <random>

#include "clifcomp/qsqrt3.hpp"

using clifcomp::QSqrt3;

namespace {

QSqrt3 rat(long n, long d) { return QSqrt3::rational(n, d); }

QSqrt3 random_scalar(std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 8), coin(0, 1);
  while (true) {
    mpq_class a(num(rng), den(rng)), b(0);
    a.canonicalize();
    if (coin(rng)) {
      b = mpq_class(num(rng), den(rng));
      b.canonicalize();
    }
    QSqrt3 v{a, b};
    if (allow_zero || !v.is_zero()) return v;
  }
}

}  // namespace

TEST_CASE("field arithmetic on frozen examples") {
  const QSqrt3 one_plus(mpq_class(1), mpq_class(1));
  const QSqrt3 one_minus(mpq_class(1), mpq_class(-1));
  CHECK(one_plus * one_minus == QSqrt3(-2));  // (1+s3)(1-s3) = 1-3

  // 1/(2+s3): the multiplication oracle pins the value.
  const QSqrt3 two_plus(mpq_class(2), mpq_class(1));
  const QSqrt3 inv = QSqrt3(1) / two_plus;
  CHECK(inv * two_plus == QSqrt3(1));
  CHECK(inv == QSqrt3(mpq_class(2), mpq_class(-1)));  // 2 - s3

  CHECK(-QSqrt3(0) == QSqrt3(0));
  CHECK(rat(1, 2) + rat(1, 2) == QSqrt3(1));
  CHECK(rat(2, 4) == rat(1, 2));  // structural equality after reduction
}

TEST_CASE("exact sign") {
  CHECK(QSqrt3(mpq_class(2), mpq_class(-1)).sign() == 1);   // 4 > 3
  CHECK(QSqrt3(mpq_class(1), mpq_class(-1)).sign() == -1);  // 1 < 3
  CHECK(QSqrt3(0).sign() == 0);
  CHECK(QSqrt3::sqrt3().sign() == 1);
  CHECK(QSqrt3(mpq_class(-7), mpq_class(4)).sign() == -1);  // 49 > 48
  CHECK(QSqrt3(mpq_class(-7, 2), mpq_class(2)).sign() == -1);
  CHECK(QSqrt3(mpq_class(7, 2), mpq_class(-2)).sign() == 1);
}

TEST_CASE("float evaluation") {
  CHECK(*rat(1, 2).to_double() == 0.5);
  CHECK(*QSqrt3::sqrt3().to_double() == doctest::Approx(1.7320508075688772).epsilon(1e-15));
  CHECK(*QSqrt3(-2).to_double() == -2.0);
}

TEST_CASE("division by zero is an error value") {
  CHECK(!QSqrt3(1).checked_div(QSqrt3(0)).has_value());
  CHECK(!QSqrt3(0).inverse().has_value());
  CHECK_THROWS_AS(QSqrt3(1) / QSqrt3(0), std::domain_error);
}

TEST_CASE("inverse and sign multiplicativity on fuzzed elements") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 400; ++i) {
    const QSqrt3 x = random_scalar(rng, false);
    CHECK(x * *x.inverse() == QSqrt3(1));
    const QSqrt3 y = random_scalar(rng);
    CHECK((x * y).sign() == x.sign() * y.sign());
  }
}

TEST_CASE("no nonzero rational pair satisfies a^2 = 3 b^2") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 400; ++i) {
    const QSqrt3 v = random_scalar(rng, false);
    const mpq_class a = v.rat_part(), b = v.s3_part();
    CHECK(a * a != 3 * b * b);
  }
}

TEST_CASE("float addition agrees within a few ulps") {
  std::mt19937_64 rng(999);
  for (int i = 0; i < 300; ++i) {
    const QSqrt3 x = random_scalar(rng), y = random_scalar(rng);
    const double exact = *(x + y).to_double();
    const double approx = *x.to_double() + *y.to_double();
    const double scale = std::max({1.0, std::abs(exact), std::abs(approx)});
    CHECK(std::abs(exact - approx) <= 8 * std::numeric_limits<double>::epsilon() * scale);
  }
}

TEST_CASE("canonical text form") {
  CHECK(QSqrt3(0).str() == "0");
  CHECK(rat(-1, 2).str() == "-1/2");
  CHECK(QSqrt3::sqrt3().str() == "s3");
  CHECK(QSqrt3::sqrt3_times(1, 2).str() == "1/2 s3");
  CHECK(QSqrt3(mpq_class(-1, 2), mpq_class(1, 2)).str() == "-1/2 + 1/2 s3");
  CHECK(QSqrt3(mpq_class(2), mpq_class(-3)).str() == "2 - 3 s3");
}
