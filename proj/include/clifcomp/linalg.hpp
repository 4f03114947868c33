#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "clifcomp/qsqrt3.hpp"

namespace clifcomp {

// Dense matrix over Q(sqrt 3). Sizes here are tiny (at most 512 x 64), so
// plain exact Gaussian elimination is all we need.
class QMat {
public:
  QMat() = default;
  QMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static QMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  QSqrt3& at(int r, int c) { return a_[static_cast<size_t>(r) * c_ + c]; }
  const QSqrt3& at(int r, int c) const { return a_[static_cast<size_t>(r) * c_ + c]; }

  std::vector<QSqrt3> matvec(const std::vector<QSqrt3>& v) const;
  QMat operator*(const QMat& o) const;
  bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

private:
  int r_ = 0, c_ = 0;
  std::vector<QSqrt3> a_;
};

int matrix_rank(QMat a);
bool is_invertible(const QMat& a);

struct LinearSolution {
  enum class Kind { Inconsistent, Unique, Underdetermined };
  Kind kind = Kind::Inconsistent;
  std::vector<QSqrt3> particular;               // valid for Unique/Underdetermined
  std::vector<std::vector<QSqrt3>> nullspace;   // basis, Underdetermined only
};

// Exact solution set of A x = b.
LinearSolution solve_linear(QMat a, std::vector<QSqrt3> b);

// Basis of the kernel of A.
std::vector<std::vector<QSqrt3>> nullspace(QMat a);

// Congruent diagonalization of a symmetric matrix; returns the diagonal
// entries (zeros allowed for degenerate forms).
std::vector<QSqrt3> symmetric_diagonal(QMat g);

// (#positive, #negative) by exact sign.
std::pair<int, int> diag_signature(const std::vector<QSqrt3>& d);

// Exact square root inside Q(sqrt 3), when one exists.
std::optional<QSqrt3> field_sqrt(const QSqrt3& v);

// Roots in Q(sqrt 3) of a x^2 + b x + c (a may be zero). The discriminant
// square-root test is exact, so the returned list is complete over the field.
std::vector<QSqrt3> solve_quadratic(const QSqrt3& a, const QSqrt3& b, const QSqrt3& c);

}  // namespace clifcomp
