#include "clifcomp/products.hpp"

#include <stdexcept>

namespace clifcomp {

std::string product_name(ProductId id) {
  switch (id) {
    case ProductId::Clifford: return "clifford";
    case ProductId::Dot: return "dot";
    case ProductId::Bullet: return "bullet";
    case ProductId::Star: return "star";
    case ProductId::DotMinus: return "dot-";
    case ProductId::BulletMinus: return "bullet-";
    case ProductId::StarMinus: return "star-";
    case ProductId::RotParaTilde: return "rot-para";
    case ProductId::PsParaBar: return "ps-para";
  }
  throw std::logic_error("unknown product id");
}

ProductId product_from_name(const std::string& name) {
  if (name == "clifford") return ProductId::Clifford;
  if (name == "dot") return ProductId::Dot;
  if (name == "bullet") return ProductId::Bullet;
  if (name == "star") return ProductId::Star;
  if (name == "dot-") return ProductId::DotMinus;
  if (name == "bullet-") return ProductId::BulletMinus;
  if (name == "star-") return ProductId::StarMinus;
  if (name == "rot-para") return ProductId::RotParaTilde;
  if (name == "ps-para") return ProductId::PsParaBar;
  throw std::invalid_argument("unknown product id: " + name);
}

namespace {

QMat tau_matrix(bool corrected) {
  // Coordinate order [1, e12, e23, e13, e1, e2, e3, e123]; columns hold the
  // images of the basis blades.
  QMat m(8, 8);
  const QSqrt3 mhalf = QSqrt3::rational(-1, 2);
  const QSqrt3 hs3 = QSqrt3::sqrt3_times(1, 2);
  m.at(0, 0) = QSqrt3(1);
  m.at(1, 1) = QSqrt3(1);
  m.at(3, 3) = QSqrt3(1);
  m.at(7, 7) = QSqrt3(1);
  // e1 -> -1/2 e1 + (s3/2) e3 and e2 -> -1/2 e2 + (s3/2) e23 in both variants.
  m.at(4, 4) = mhalf;
  m.at(6, 4) = hs3;
  m.at(5, 5) = mhalf;
  m.at(2, 5) = hs3;
  if (corrected) {
    m.at(4, 6) = -hs3;
    m.at(6, 6) = mhalf;
    m.at(5, 2) = -hs3;
    m.at(2, 2) = mhalf;
  } else {
    // Printed images: e3 -> -1/2(e3 - s3 e1), e23 -> -1/2(e23 - s3 e2).
    m.at(4, 6) = hs3;
    m.at(6, 6) = mhalf;
    m.at(5, 2) = hs3;
    m.at(2, 2) = mhalf;
  }
  return m;
}

}  // namespace

TauMap::TauMap(TauKind kind, QMat m) : kind_(kind), m_(std::move(m)) { m2_ = m_ * m_; }

const TauMap& TauMap::paper_literal() {
  static const TauMap t(TauKind::PaperLiteral, tau_matrix(false));
  return t;
}

const TauMap& TauMap::corrected() {
  static const TauMap t(TauKind::Corrected, tau_matrix(true));
  return t;
}

TauMap TauMap::custom(QMat m) {
  if (m.rows() != 8 || m.cols() != 8) throw std::invalid_argument("tau matrix must be 8x8");
  if (!is_invertible(m)) throw std::invalid_argument("custom tau matrix is singular");
  return TauMap(TauKind::Custom, std::move(m));
}

Multivector TauMap::apply_mat(const QMat& m, const Multivector& x) {
  Multivector r(x.sig());
  for (int c = 0; c < kDim; ++c) {
    if (x[c].is_zero()) continue;
    for (int rIdx = 0; rIdx < kDim; ++rIdx)
      if (!m.at(rIdx, c).is_zero()) r[rIdx] += m.at(rIdx, c) * x[c];
  }
  return r;
}

AlgebraHandle AlgebraHandle::make(Signature sig, ProductId product, const TauMap& tau,
                                  SplitKind split) {
  AlgebraHandle h;
  h.sig = sig;
  h.product = product;
  h.tau = tau;
  h.split = split;
  if (product == ProductId::RotParaTilde) h.domain = Domain::Rot;
  if (product == ProductId::PsParaBar) h.domain = Domain::Ps;
  return h;
}

std::string AlgebraHandle::str() const {
  std::string s = sig.str() + " " + product_name(product);
  if (product == ProductId::Star || product == ProductId::StarMinus) {
    switch (tau.kind()) {
      case TauKind::PaperLiteral: s += " tau=paper"; break;
      case TauKind::Corrected: s += " tau=corrected"; break;
      case TauKind::Custom: s += " tau=custom"; break;
    }
  }
  if (split == SplitKind::PseudoscalarIdempotent) s += " split=pseudoscalar";
  if (domain == Domain::Rot) s += " [Rot]";
  if (domain == Domain::Ps) s += " [Ps]";
  if (domain == Domain::Scalar) s += " [R]";
  return s;
}

namespace {

std::pair<Multivector, Multivector> split_of(const AlgebraHandle& h, const Multivector& x) {
  return h.split == SplitKind::EvenOdd ? even_odd_split(x) : pseudoscalar_split(x);
}

// x.y = x+ y+ + (y-)~ x- + y- x+ + x- (y+)~, with the minus variant flipping
// the middle two terms.
Multivector dot_like(const AlgebraHandle& h, const Multivector& x, const Multivector& y,
                     bool minus) {
  const auto [xp, xm] = split_of(h, x);
  const auto [yp, ym] = split_of(h, y);
  Multivector r = geometric_product(xp, yp);
  Multivector t2 = geometric_product(clifford_conjugation(ym), xm);
  Multivector t3 = geometric_product(ym, xp);
  if (minus) {
    r -= t2;
    r -= t3;
  } else {
    r += t2;
    r += t3;
  }
  r += geometric_product(xm, clifford_conjugation(yp));
  return r;
}

// x.y = x+~ y+~ + y-~ x- - y- x+~ - x- y+.
Multivector bullet_like(const AlgebraHandle& h, const Multivector& x, const Multivector& y,
                        bool minus) {
  const auto [xp, xm] = split_of(h, x);
  const auto [yp, ym] = split_of(h, y);
  const Multivector xpc = clifford_conjugation(xp);
  Multivector r = geometric_product(xpc, clifford_conjugation(yp));
  Multivector t2 = geometric_product(clifford_conjugation(ym), xm);
  Multivector t3 = geometric_product(ym, xpc);
  if (minus) {
    r -= t2;
    r += t3;
  } else {
    r += t2;
    r -= t3;
  }
  r -= geometric_product(xm, yp);
  return r;
}

// x*y = tau(x+~) tau2(y+~) + tau2(y-~) tau(x-) - tau2(y-) tau(x+~)
//       - tau(x-) tau2(y+); tau powers are applied to the split-and-
//       conjugated pieces, before the geometric products.
Multivector star_like(const AlgebraHandle& h, const Multivector& x, const Multivector& y,
                      bool minus) {
  const auto [xp, xm] = split_of(h, x);
  const auto [yp, ym] = split_of(h, y);
  const Multivector txpc = h.tau.apply(clifford_conjugation(xp));
  const Multivector txm = h.tau.apply(xm);
  Multivector r = geometric_product(txpc, h.tau.apply_squared(clifford_conjugation(yp)));
  Multivector t2 = geometric_product(h.tau.apply_squared(clifford_conjugation(ym)), txm);
  Multivector t3 = geometric_product(h.tau.apply_squared(ym), txpc);
  if (minus) {
    r -= t2;
    r += t3;
  } else {
    r += t2;
    r -= t3;
  }
  r -= geometric_product(txm, h.tau.apply_squared(yp));
  return r;
}

}  // namespace

Multivector para_sub_product(const Multivector& x, const Multivector& y, ProductId which) {
  if (which == ProductId::RotParaTilde) {
    if (!subalgebra_membership(x, Subalgebra::Rot) || !subalgebra_membership(y, Subalgebra::Rot))
      throw std::invalid_argument("rot-para product requires arguments in Rot");
    return geometric_product(clifford_conjugation(x), clifford_conjugation(y));
  }
  if (which == ProductId::PsParaBar) {
    if (!subalgebra_membership(x, Subalgebra::Ps) || !subalgebra_membership(y, Subalgebra::Ps))
      throw std::invalid_argument("ps-para product requires arguments in Ps");
    return geometric_product(grade_inversion(x), grade_inversion(y));
  }
  throw std::invalid_argument("para_sub_product expects rot-para or ps-para");
}

Multivector apply_product(const AlgebraHandle& h, const Multivector& x, const Multivector& y) {
  if (x.sig() != h.sig || y.sig() != h.sig)
    throw std::invalid_argument("argument signature differs from the handle's");
  switch (h.product) {
    case ProductId::Clifford: return geometric_product(x, y);
    case ProductId::Dot: return dot_like(h, x, y, false);
    case ProductId::DotMinus: return dot_like(h, x, y, true);
    case ProductId::Bullet: return bullet_like(h, x, y, false);
    case ProductId::BulletMinus: return bullet_like(h, x, y, true);
    case ProductId::Star: return star_like(h, x, y, false);
    case ProductId::StarMinus: return star_like(h, x, y, true);
    case ProductId::RotParaTilde:
    case ProductId::PsParaBar: return para_sub_product(x, y, h.product);
  }
  throw std::logic_error("unknown product id");
}

Multivector star_composed(const AlgebraHandle& h, const Multivector& x, const Multivector& y) {
  AlgebraHandle dot = h;
  dot.product = ProductId::Dot;
  dot.domain = Domain::Full;
  return apply_product(dot, h.tau.apply(full_grade_inversion(x)),
                       h.tau.apply_squared(full_grade_inversion(y)));
}

}  // namespace clifcomp
