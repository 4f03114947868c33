#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace clifcomp {

// Exact element of the real quadratic field Q(sqrt 3): value = a + b*sqrt(3).
// Both components are arbitrary-precision rationals kept in canonical form
// (reduced, positive denominator), so equality is structural. This is the
// scalar type for every computation in the library; floating point only
// appears in report rendering.
class QSqrt3 {
public:
  QSqrt3() : a_(0), b_(0) {}
  QSqrt3(long v) : a_(v), b_(0) {}
  QSqrt3(int v) : a_(v), b_(0) {}

  // a + b*sqrt(3) from already-canonical rationals.
  QSqrt3(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static QSqrt3 rational(long num, long den);
  static QSqrt3 sqrt3() { return QSqrt3(mpq_class(0), mpq_class(1)); }
  // num/den * sqrt(3)
  static QSqrt3 sqrt3_times(long num, long den);

  const mpq_class& rat_part() const { return a_; }
  const mpq_class& s3_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  // Exact sign of the real number a + b*sqrt(3): -1, 0 or +1.
  int sign() const;

  QSqrt3 operator-() const { return QSqrt3(-a_, -b_); }
  QSqrt3 operator+(const QSqrt3& o) const { return QSqrt3(a_ + o.a_, b_ + o.b_); }
  QSqrt3 operator-(const QSqrt3& o) const { return QSqrt3(a_ - o.a_, b_ - o.b_); }
  QSqrt3 operator*(const QSqrt3& o) const {
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 3 b1 b2 + (a1 b2 + a2 b1) s
    return QSqrt3(a_ * o.a_ + 3 * b_ * o.b_, a_ * o.b_ + o.a_ * b_);
  }
  QSqrt3& operator+=(const QSqrt3& o);
  QSqrt3& operator-=(const QSqrt3& o);
  QSqrt3& operator*=(const QSqrt3& o);

  // Multiplicative inverse; nullopt for zero.
  std::optional<QSqrt3> inverse() const;
  // Exact division; nullopt when o == 0.
  std::optional<QSqrt3> checked_div(const QSqrt3& o) const;
  // Division with a nonzero divisor precondition (throws std::domain_error).
  QSqrt3 operator/(const QSqrt3& o) const;

  bool operator==(const QSqrt3& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const QSqrt3& o) const { return !(*this == o); }

  // Structural order (lexicographic on (a, b)); used for canonical sorting,
  // not the order of the reals.
  static int cmp(const QSqrt3& x, const QSqrt3& y);
  bool operator<(const QSqrt3& o) const { return cmp(*this, o) < 0; }

  QSqrt3 abs() const { return sign() < 0 ? -*this : *this; }

  // Nearest-double evaluation; nullopt if the value overflows binary64.
  std::optional<double> to_double() const;

  // Canonical text form: "0", "-1/2", "s3", "2 s3", "-1/2 + 1/2 s3", ...
  std::string str() const;

private:
  mpq_class a_;
  mpq_class b_;
};

std::ostream& operator<<(std::ostream& os, const QSqrt3& x);

}  // namespace clifcomp
