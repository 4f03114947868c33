#pragma once

#include <array>
#include <string>

#include "clifcomp/clifford.hpp"

namespace clifcomp {

// The four grade-sign involutions, as diagonal sign patterns by grade:
//   reversion            (+, +, -, -)
//   grade inversion      (+, -, +, -)
//   Clifford conjugation (+, -, -, +)
//   full grade inversion (+, -, -, -)
enum class Involution { Reversion, GradeInversion, CliffordConjugation, FullGradeInversion };

const std::array<int, 4>& involution_grade_signs(Involution inv);
Multivector apply_involution(const Multivector& x, Involution inv);

Multivector reversion(const Multivector& x);
Multivector grade_inversion(const Multivector& x);
Multivector clifford_conjugation(const Multivector& x);
Multivector full_grade_inversion(const Multivector& x);

enum class NormId { NStar, NTilde, NDagger, NBar };
std::string norm_name(NormId id);
NormId norm_from_name(const std::string& name);

// n*(x): the diagonal form with weights
//   (1, l1l2, l2l3, l1l3, l1, l2, l3, l1l2l3)
// in coordinate order.
QSqrt3 norm_star(const Multivector& x);
std::array<int, 8> norm_star_weights(const Signature& sig);

// n~(x) = x x~, valued in the pseudoscalar subalgebra {1, e123}. A result
// with a nonzero grade-1 or grade-2 coordinate would falsify that claim and
// raises std::logic_error.
Multivector norm_tilde(const Multivector& x);

// Grade-0 part of x x-reversed; on the full carrier this coincides with the
// n* weight pattern (they are distinct definitions, equal as forms).
QSqrt3 norm_dagger(const Multivector& x);

// Grade-0 part of z z-bar for z in Ps: a^2 + l1l2l3 b^2. Input outside Ps
// throws std::invalid_argument.
QSqrt3 norm_bar(const Multivector& z);

// Scalar value of the named norm (NTilde contributes its scalar part, which
// is the full value on Rot).
QSqrt3 norm_value(NormId id, const Multivector& x);

// <x,y> = n(x+y) - n(x) - n(y).
QSqrt3 polarize(NormId id, const Multivector& x, const Multivector& y);

}  // namespace clifcomp
