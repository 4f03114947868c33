#include "clifcomp/involutions.hpp"

#include <stdexcept>

namespace clifcomp {

const std::array<int, 4>& involution_grade_signs(Involution inv) {
  static const std::array<int, 4> rev = {1, 1, -1, -1};
  static const std::array<int, 4> gin = {1, -1, 1, -1};
  static const std::array<int, 4> con = {1, -1, -1, 1};
  static const std::array<int, 4> ful = {1, -1, -1, -1};
  switch (inv) {
    case Involution::Reversion: return rev;
    case Involution::GradeInversion: return gin;
    case Involution::CliffordConjugation: return con;
    case Involution::FullGradeInversion: return ful;
  }
  throw std::logic_error("unknown involution");
}

Multivector apply_involution(const Multivector& x, Involution inv) {
  const auto& signs = involution_grade_signs(inv);
  Multivector r(x.sig());
  for (int i = 0; i < kDim; ++i) r[i] = signs[kGrade[i]] > 0 ? x[i] : -x[i];
  return r;
}

Multivector reversion(const Multivector& x) { return apply_involution(x, Involution::Reversion); }
Multivector grade_inversion(const Multivector& x) {
  return apply_involution(x, Involution::GradeInversion);
}
Multivector clifford_conjugation(const Multivector& x) {
  return apply_involution(x, Involution::CliffordConjugation);
}
Multivector full_grade_inversion(const Multivector& x) {
  return apply_involution(x, Involution::FullGradeInversion);
}

std::string norm_name(NormId id) {
  switch (id) {
    case NormId::NStar: return "nstar";
    case NormId::NTilde: return "ntilde";
    case NormId::NDagger: return "ndagger";
    case NormId::NBar: return "nbar";
  }
  throw std::logic_error("unknown norm id");
}

NormId norm_from_name(const std::string& name) {
  if (name == "nstar") return NormId::NStar;
  if (name == "ntilde") return NormId::NTilde;
  if (name == "ndagger") return NormId::NDagger;
  if (name == "nbar") return NormId::NBar;
  throw std::invalid_argument("unknown norm id: " + name);
}

std::array<int, 8> norm_star_weights(const Signature& sig) {
  const int l1 = sig.l(0), l2 = sig.l(1), l3 = sig.l(2);
  return {1, l1 * l2, l2 * l3, l1 * l3, l1, l2, l3, l1 * l2 * l3};
}

QSqrt3 norm_star(const Multivector& x) {
  const auto w = norm_star_weights(x.sig());
  QSqrt3 acc;
  for (int i = 0; i < kDim; ++i) {
    if (x[i].is_zero()) continue;
    const QSqrt3 sq = x[i] * x[i];
    if (w[i] > 0)
      acc += sq;
    else
      acc -= sq;
  }
  return acc;
}

Multivector norm_tilde(const Multivector& x) {
  Multivector r = geometric_product(x, clifford_conjugation(x));
  for (int i = 0; i < kDim; ++i)
    if (i != kScalarIdx && i != kPseudoIdx && !r[i].is_zero())
      throw std::logic_error("x x~ landed outside Ps at coordinate " + kBladeName[i]);
  return r;
}

QSqrt3 norm_dagger(const Multivector& x) {
  return geometric_product(x, reversion(x))[kScalarIdx];
}

QSqrt3 norm_bar(const Multivector& z) {
  if (!subalgebra_membership(z, Subalgebra::Ps))
    throw std::invalid_argument("norm_bar requires an element of Ps");
  return geometric_product(z, grade_inversion(z))[kScalarIdx];
}

QSqrt3 norm_value(NormId id, const Multivector& x) {
  switch (id) {
    case NormId::NStar: return norm_star(x);
    case NormId::NTilde: return geometric_product(x, clifford_conjugation(x))[kScalarIdx];
    case NormId::NDagger: return norm_dagger(x);
    case NormId::NBar: return norm_bar(x);
  }
  throw std::logic_error("unknown norm id");
}

QSqrt3 polarize(NormId id, const Multivector& x, const Multivector& y) {
  return norm_value(id, x + y) - norm_value(id, x) - norm_value(id, y);
}

}  // namespace clifcomp
