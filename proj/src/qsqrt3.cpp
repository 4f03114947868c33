#include "clifcomp/qsqrt3.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace clifcomp {

QSqrt3 QSqrt3::rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return QSqrt3(std::move(q), mpq_class(0));
}

QSqrt3 QSqrt3::sqrt3_times(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return QSqrt3(mpq_class(0), std::move(q));
}

int QSqrt3::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Signs differ: compare a^2 against 3 b^2. Equality would mean sqrt(3) is
  // rational, which the canonical forms rule out for nonzero (a, b).
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = 3 * b_ * b_;
  const int c = cmp(lhs, rhs);
  if (c == 0) throw std::logic_error("a^2 == 3 b^2 with nonzero components");
  return c > 0 ? sa : sb;
}

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
  *this = *this * o;
  return *this;
}

std::optional<QSqrt3> QSqrt3::inverse() const {
  if (is_zero()) return std::nullopt;
  // 1/(a + b s) = (a - b s) / (a^2 - 3 b^2); the denominator is nonzero for
  // any nonzero element because sqrt(3) is irrational.
  const mpq_class d = a_ * a_ - 3 * b_ * b_;
  return QSqrt3(a_ / d, -b_ / d);
}

std::optional<QSqrt3> QSqrt3::checked_div(const QSqrt3& o) const {
  const auto inv = o.inverse();
  if (!inv) return std::nullopt;
  return *this * *inv;
}

QSqrt3 QSqrt3::operator/(const QSqrt3& o) const {
  const auto r = checked_div(o);
  if (!r) throw std::domain_error("division by zero in Q(sqrt 3)");
  return *r;
}

int QSqrt3::cmp(const QSqrt3& x, const QSqrt3& y) {
  const int c = ::cmp(x.a_, y.a_);
  if (c != 0) return c;
  return ::cmp(x.b_, y.b_);
}

std::optional<double> QSqrt3::to_double() const {
  const double da = a_.get_d();
  const double db = b_.get_d();
  const double v = da + db * std::sqrt(3.0);
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

namespace {

std::string rat_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// |b| s3 with the coefficient omitted when it is 1.
std::string s3_term(const mpq_class& mag) {
  if (mag == 1) return "s3";
  return rat_str(mag) + " s3";
}

}  // namespace

std::string QSqrt3::str() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa == 0 && sb == 0) return "0";
  if (sb == 0) return rat_str(a_);
  if (sa == 0) return sb < 0 ? "-" + s3_term(mpq_class(-b_)) : s3_term(b_);
  std::string out = rat_str(a_);
  out += sb < 0 ? " - " : " + ";
  out += s3_term(mpq_class(sb < 0 ? mpq_class(-b_) : b_));
  return out;
}

std::ostream& operator<<(std::ostream& os, const QSqrt3& x) { return os << x.str(); }

}  // namespace clifcomp
