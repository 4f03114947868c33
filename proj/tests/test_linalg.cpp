#include <doctest.h>

#include "clifcomp/linalg.hpp"

using namespace clifcomp;

TEST_CASE("rank and nullspace") {
  QMat a(3, 3);
  a.at(0, 0) = QSqrt3(1);
  a.at(0, 1) = QSqrt3(2);
  a.at(1, 1) = QSqrt3(1);
  a.at(2, 0) = QSqrt3(1);
  a.at(2, 1) = QSqrt3(3);  // row2 = row0 + row1
  CHECK(matrix_rank(a) == 2);
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  // Kernel vector must satisfy A v = 0.
  const auto img = a.matvec(ns[0]);
  for (const auto& v : img) CHECK(v.is_zero());
}

TEST_CASE("solve: unique, inconsistent, underdetermined") {
  QMat a(2, 2);
  a.at(0, 0) = QSqrt3(1);
  a.at(1, 1) = QSqrt3::sqrt3();
  auto sol = solve_linear(a, {QSqrt3(2), QSqrt3(3)});
  REQUIRE(sol.kind == LinearSolution::Kind::Unique);
  CHECK(sol.particular[0] == QSqrt3(2));
  CHECK(sol.particular[1] == QSqrt3::sqrt3());  // 3/sqrt3

  QMat b(2, 1);
  b.at(0, 0) = QSqrt3(1);
  b.at(1, 0) = QSqrt3(1);
  CHECK(solve_linear(b, {QSqrt3(0), QSqrt3(1)}).kind == LinearSolution::Kind::Inconsistent);

  QMat c(1, 2);
  c.at(0, 0) = QSqrt3(1);
  c.at(0, 1) = QSqrt3(1);
  const auto under = solve_linear(c, {QSqrt3(1)});
  REQUIRE(under.kind == LinearSolution::Kind::Underdetermined);
  CHECK(under.nullspace.size() == 1);
}

TEST_CASE("symmetric diagonalization signatures") {
  // Hyperbolic plane: x y form has signature (1,1).
  QMat g(2, 2);
  g.at(0, 1) = QSqrt3(1);
  g.at(1, 0) = QSqrt3(1);
  CHECK(diag_signature(symmetric_diagonal(g)) == std::pair<int, int>(1, 1));

  QMat d(3, 3);
  d.at(0, 0) = QSqrt3(2);
  d.at(1, 1) = QSqrt3(-5);
  d.at(2, 2) = QSqrt3::sqrt3();
  CHECK(diag_signature(symmetric_diagonal(d)) == std::pair<int, int>(2, 1));
}

TEST_CASE("field square roots") {
  CHECK(*field_sqrt(QSqrt3(4)) == QSqrt3(2));
  CHECK(*field_sqrt(QSqrt3::rational(9, 4)) == QSqrt3::rational(3, 2));
  CHECK(*field_sqrt(QSqrt3(3)) == QSqrt3::sqrt3());
  CHECK(*field_sqrt(QSqrt3(12)) == QSqrt3::sqrt3_times(2, 1));
  // (1 + s3)^2 = 4 + 2 s3
  CHECK(*field_sqrt(QSqrt3(mpq_class(4), mpq_class(2))) == QSqrt3(mpq_class(1), mpq_class(1)));
  CHECK(!field_sqrt(QSqrt3(2)).has_value());
  CHECK(!field_sqrt(QSqrt3(-1)).has_value());
  CHECK(*field_sqrt(QSqrt3(0)) == QSqrt3(0));
}

TEST_CASE("quadratic roots over the field") {
  // x^2 - 1: roots +-1.
  auto r = solve_quadratic(QSqrt3(1), QSqrt3(0), QSqrt3(-1));
  REQUIRE(r.size() == 2);
  // 3x^2 - 1: roots +- s3/3.
  r = solve_quadratic(QSqrt3(3), QSqrt3(0), QSqrt3(-1));
  REQUIRE(r.size() == 2);
  CHECK((r[0] == QSqrt3::sqrt3_times(1, 3) || r[1] == QSqrt3::sqrt3_times(1, 3)));
  // x^2 + 1: no real roots.
  CHECK(solve_quadratic(QSqrt3(1), QSqrt3(0), QSqrt3(1)).empty());
  // Linear fallback.
  r = solve_quadratic(QSqrt3(0), QSqrt3(2), QSqrt3(-1));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == QSqrt3::rational(1, 2));
}

TEST_CASE("matrix product and identity") {
  const QMat id = QMat::identity(3);
  QMat a(3, 3);
  a.at(0, 1) = QSqrt3::sqrt3();
  a.at(2, 0) = QSqrt3::rational(1, 2);
  CHECK(a * id == a);
  CHECK(id * a == a);
  CHECK(is_invertible(id));
  CHECK(!is_invertible(a));
}
