#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "clifcomp/qsqrt3.hpp"

namespace clifcomp {

// Diagonal quadratic form Q = diag(l1, l2, l3) with li in {+1, -1}.
struct Signature {
  std::array<int8_t, 3> lambda{1, 1, 1};

  static Signature of(int p, int q);
  int p() const { return (lambda[0] > 0) + (lambda[1] > 0) + (lambda[2] > 0); }
  int q() const { return 3 - p(); }
  int l(int i) const { return lambda[i]; }  // i in 0..2 for e1..e3
  // Product l1*l2*l3; the square of the pseudoscalar is its negative.
  int lambda_product() const { return lambda[0] * lambda[1] * lambda[2]; }

  bool operator==(const Signature& o) const { return lambda == o.lambda; }
  bool operator!=(const Signature& o) const { return !(*this == o); }
  std::string str() const;
};

// The four signatures of the 3D family, in report order.
const std::array<Signature, 4>& all_signatures();

// Blade indexing. Coordinates are kept in the coordinate order
//   [1, e12, e23, e13, e1, e2, e3, e123]
// ("paper order" below); bitmasks (bit i <=> generator e_{i+1}) are used
// internally to compute blade products.
inline constexpr int kDim = 8;
inline constexpr std::array<uint8_t, 8> kPaperMask = {0b000, 0b011, 0b110, 0b101,
                                                      0b001, 0b010, 0b100, 0b111};
inline constexpr std::array<uint8_t, 8> kMaskToPaper = {0, 4, 5, 1, 6, 3, 2, 7};
inline constexpr std::array<int, 8> kGrade = {0, 2, 2, 2, 1, 1, 1, 3};
extern const std::array<std::string, 8> kBladeName;

// Paper index of the unit scalar and the pseudoscalar c = e1e2e3.
inline constexpr int kScalarIdx = 0;
inline constexpr int kPseudoIdx = 7;

// Product of two basis blades: coefficient is +-1 and a result blade.
struct BladeProduct {
  int sign;      // +1 or -1
  int paper_idx; // result blade, paper order
};
BladeProduct blade_product(int paper_i, int paper_j, const Signature& sig);

// Cached 8x8 geometric product table for one signature.
struct BladeTable {
  int8_t sign[8][8];
  uint8_t target[8][8];
};
const BladeTable& blade_table(const Signature& sig);

class Multivector {
public:
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector zero(Signature sig) { return Multivector(sig); }
  static Multivector scalar(Signature sig, QSqrt3 v);
  static Multivector blade(Signature sig, int paper_idx, QSqrt3 coeff = QSqrt3(1));

  const Signature& sig() const { return sig_; }
  const QSqrt3& operator[](int i) const { return c_[i]; }
  QSqrt3& operator[](int i) { return c_[i]; }

  bool is_zero() const;
  // True when only the grade-0 coordinate may be nonzero.
  bool is_scalar() const;

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector scaled(const QSqrt3& s) const;

  bool operator==(const Multivector& o) const { return sig_ == o.sig_ && c_ == o.c_; }
  bool operator!=(const Multivector& o) const { return !(*this == o); }

  // Structural order: signature key then lexicographic coordinates.
  static int cmp(const Multivector& x, const Multivector& y);
  bool operator<(const Multivector& o) const { return cmp(*this, o) < 0; }

private:
  std::array<QSqrt3, 8> c_{};
  Signature sig_;
};

// Associative geometric (Clifford) product. Signature mismatch throws.
Multivector geometric_product(const Multivector& x, const Multivector& y);

// Zeroes every coordinate whose grade differs from k.
Multivector grade_project(const Multivector& x, int k);

// (grades 0 and 2, grades 1 and 3).
std::pair<Multivector, Multivector> even_odd_split(const Multivector& x);

// (x c+, x c-) with c+- = (1 +- c)/2; the two parts always sum back to x.
std::pair<Multivector, Multivector> pseudoscalar_split(const Multivector& x);

Multivector pseudoscalar(Signature sig);  // c = e1e2e3

enum class Subalgebra { Rot, Ps };
// True iff every coordinate outside the subalgebra's span vanishes.
bool subalgebra_membership(const Multivector& x, Subalgebra which);

// Basis paper indices spanning a subalgebra (Rot: 1,e12,e23,e13; Ps: 1,e123).
const std::array<int, 4>& rot_basis_indices();
const std::array<int, 2>& ps_basis_indices();

}  // namespace clifcomp
