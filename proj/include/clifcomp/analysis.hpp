#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clifcomp/involutions.hpp"
#include "clifcomp/linalg.hpp"
#include "clifcomp/products.hpp"

namespace clifcomp {

// One falsifying instance of an identity, carrying the participating
// elements and both evaluated sides. Serialized by the report layer.
struct Witness {
  std::string check;
  std::vector<std::pair<std::string, Multivector>> elems;
  std::vector<std::pair<std::string, Multivector>> sides;
  std::vector<std::pair<std::string, QSqrt3>> values;
  std::string note;
};

struct CheckResult {
  bool holds = false;
  std::optional<Witness> witness;
  static CheckResult ok() { return CheckResult{true, std::nullopt}; }
  static CheckResult fail(Witness w) { return CheckResult{false, std::move(w)}; }
};

// Precomputed basis, product table and classification norm for one handle.
class AlgebraCtx {
public:
  explicit AlgebraCtx(AlgebraHandle handle);

  const AlgebraHandle& handle() const { return h_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<int>& basis_indices() const { return basis_; }
  const Multivector& basis_mv(int k) const { return basis_mv_[k]; }
  const Multivector& prod(int i, int j) const { return table_[i * dim() + j]; }
  Multivector product(const Multivector& x, const Multivector& y) const;
  NormId norm() const { return norm_; }

  // Polarized bilinear form of the classification norm.
  QSqrt3 bilinear(const Multivector& x, const Multivector& y) const;
  QSqrt3 bilinear(NormId id, const Multivector& x, const Multivector& y) const;

  // Coordinates in the handle's basis; throws when x leaves the span.
  std::vector<QSqrt3> span_coords(const Multivector& x) const;
  Multivector from_span_coords(const std::vector<QSqrt3>& c) const;

private:
  AlgebraHandle h_;
  std::vector<int> basis_;
  std::vector<Multivector> basis_mv_;
  std::vector<Multivector> table_;
  NormId norm_;
};

// Norm the classifier pairs with a handle: n* on the full carrier, the
// scalar part of n~ on Rot, n-bar on Ps.
NormId handle_norm(const AlgebraHandle& h);

struct UnitSearch {
  enum class Kind { None, Unique, Degenerate };
  Kind kind = Kind::None;
  std::optional<Multivector> unit;
  // Evidence kept for "None": a one-sided unit (when one exists) together
  // with the first basis element on which the other side fails.
  std::string evidence_side;
  std::optional<Multivector> one_sided;
  std::optional<int> failing_basis;
  std::optional<Multivector> failing_value;
};
UnitSearch find_unit(const AlgebraCtx& ctx);

struct ParaunitSearch {
  std::vector<Multivector> all;          // every operational paraunit found
  std::optional<Multivector> canonical;  // sparsest, then structural order
  std::vector<Multivector> central_idempotents;  // before the involution filter
  int centralizer_dim = 0;
  // False only if an exotic centralizer prevented the exact idempotent
  // enumeration (never expected on these carriers).
  bool search_complete = true;
};
ParaunitSearch find_paraunit(const AlgebraCtx& ctx);

// Full linearization of n(x o y) = n(x) n(y) over all basis quadruples:
//   B(bi o bk, bj o bl) + B(bi o bl, bj o bk) = B(bi,bj) B(bk,bl).
// Equivalent to the composition identity over a characteristic-0 field.
CheckResult verify_composition(const AlgebraCtx& ctx, NormId norm);

enum class AlgFlag { Commutative, Associative, Alternative, Flexible };
std::string flag_name(AlgFlag f);
CheckResult check_flag(const AlgebraCtx& ctx, AlgFlag f);

// Polarized basis check of x o (y o x) = n(x) y and (x o y) o x = n(x) y.
CheckResult symmetric_composition_check(const AlgebraCtx& ctx, NormId norm);

// dim { D : D(bi o bj) = D(bi) o bj + bi o D(bj) }, by exact elimination.
int derivation_dimension(const AlgebraCtx& ctx);

struct IntrinsicNorm {
  bool ok = false;
  std::string error;
  QMat gram;  // n x n over the handle basis
  std::pair<int, int> signature{0, 0};
  bool matches_handle_norm = false;
};
// Trace/norm extraction from x o x = t(x) x - n(x) u on a spanning set.
IntrinsicNorm intrinsic_norm_from_unit(const AlgebraCtx& ctx, const Multivector& unit);

// Exact check of m(bi o bj) = m(bi) o m(bj); singular m throws.
CheckResult automorphism_check(const AlgebraCtx& ctx, const QMat& m);

struct PropertyReport {
  AlgebraHandle handle;
  NormId norm = NormId::NStar;
  UnitSearch unit;
  ParaunitSearch paraunit;
  std::optional<Multivector> idempotent;
  CheckResult commutative, associative, alternative, flexible;
  CheckResult composition;
  CheckResult symmetric_composition;
  IntrinsicNorm intrinsic;           // populated when a unit exists
  std::pair<int, int> norm_signature{0, 0};
  int der_dim = 0;
  std::string label = "unrecognized";
};
PropertyReport classify(const AlgebraHandle& h);

// x = q0 + q1 c with q0, q1 in Rot; the reconstruction is exact.
std::pair<Multivector, Multivector> biquaternion_decompose(const Multivector& x);
Multivector biquaternion_recompose(const Multivector& q0, const Multivector& q1);

// The three decomposable involution rows (reversion, inversion, Clifford
// conjugation) against their Ps/Rot tensor actions, on every basis blade.
CheckResult biquaternion_involution_rows(const Signature& sig);

}  // namespace clifcomp
