#pragma once

#include <string>

#include "clifcomp/clifford.hpp"
#include "clifcomp/involutions.hpp"
#include "clifcomp/linalg.hpp"

namespace clifcomp {

enum class ProductId {
  Clifford,
  Dot,
  Bullet,
  Star,
  DotMinus,
  BulletMinus,
  StarMinus,
  RotParaTilde,
  PsParaBar,
};

std::string product_name(ProductId id);
ProductId product_from_name(const std::string& name);

enum class TauKind { PaperLiteral, Corrected, Custom };

// The order-three map used by the star products. It fixes 1, e12, e13 and
// e123 and acts on the (e1, e3) and (e2, e23) planes.
//
// PaperLiteral takes the printed images verbatim; its (e1, e3) block has
// determinant -1/2, so tau^3 != id (kept as a regression subject).
// Corrected restores the 120-degree rotations
//   e1  -> -1/2 e1 + (s3/2) e3,    e3  -> -(s3/2) e1 - 1/2 e3,
//   e2  -> -1/2 e2 + (s3/2) e23,   e23 -> -(s3/2) e2 - 1/2 e23,
// and satisfies tau^3 = id exactly.
class TauMap {
public:
  static const TauMap& paper_literal();
  static const TauMap& corrected();
  // Arbitrary coordinate matrix; throws std::invalid_argument when singular.
  static TauMap custom(QMat m);

  TauKind kind() const { return kind_; }
  const QMat& matrix() const { return m_; }

  Multivector apply(const Multivector& x) const { return apply_mat(m_, x); }
  Multivector apply_squared(const Multivector& x) const { return apply_mat(m2_, x); }

  static Multivector apply_mat(const QMat& m, const Multivector& x);

private:
  TauMap(TauKind kind, QMat m);
  TauKind kind_;
  QMat m_;
  QMat m2_;
};

enum class SplitKind { EvenOdd, PseudoscalarIdempotent };
enum class Domain { Full, Rot, Ps, Scalar };

// Selects one algebra: carrier signature, bilinear product, tau variant and
// the reading of the x+/x- split inside the product formulas. EvenOdd is the
// canonical reading; the pseudoscalar-idempotent reading is kept runnable for
// side-by-side comparison.
struct AlgebraHandle {
  Signature sig = Signature::of(3, 0);
  ProductId product = ProductId::Dot;
  TauMap tau = TauMap::corrected();
  SplitKind split = SplitKind::EvenOdd;
  Domain domain = Domain::Full;

  static AlgebraHandle make(Signature sig, ProductId product,
                            const TauMap& tau = TauMap::corrected(),
                            SplitKind split = SplitKind::EvenOdd);
  std::string str() const;
};

// The product selected by the handle. Signature mismatches and subalgebra
// membership violations throw.
Multivector apply_product(const AlgebraHandle& h, const Multivector& x, const Multivector& y);

// x o y = tau(conj(x)) . tau^2(conj(y)) with conj the full grade inversion
// and . the handle's dot product; kept distinct from the literal star so the
// two routes can be compared.
Multivector star_composed(const AlgebraHandle& h, const Multivector& x, const Multivector& y);

// x ot y = x~ y~ on Rot, x ob y = x- y- on Ps (membership enforced).
Multivector para_sub_product(const Multivector& x, const Multivector& y, ProductId which);

}  // namespace clifcomp
