#include "clifcomp/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace clifcomp {

const std::array<std::string, 8> kBladeName = {"1",  "e12", "e23", "e13",
                                               "e1", "e2",  "e3",  "e123"};

Signature Signature::of(int p, int q) {
  if (p < 0 || q < 0 || p + q != 3) throw std::invalid_argument("signature requires p+q=3");
  Signature s;
  for (int i = 0; i < 3; ++i) s.lambda[i] = i < p ? 1 : -1;
  return s;
}

std::string Signature::str() const {
  return "(" + std::to_string(p()) + "," + std::to_string(q()) + ")";
}

const std::array<Signature, 4>& all_signatures() {
  static const std::array<Signature, 4> sigs = {Signature::of(3, 0), Signature::of(2, 1),
                                                Signature::of(1, 2), Signature::of(0, 3)};
  return sigs;
}

BladeProduct blade_product(int paper_i, int paper_j, const Signature& sig) {
  const unsigned a = kPaperMask[paper_i];
  const unsigned b = kPaperMask[paper_j];
  // Reordering parity: generators of a must move past lower-indexed
  // generators of b to interleave the concatenated lists.
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  int sign = (swaps % 2 == 0) ? 1 : -1;
  // Each repeated generator squares to its lambda and cancels.
  for (unsigned rep = a & b; rep != 0; rep &= rep - 1)
    sign *= sig.l(std::countr_zero(rep));
  return BladeProduct{sign, kMaskToPaper[a ^ b]};
}

const BladeTable& blade_table(const Signature& sig) {
  static BladeTable tables[8];
  static bool built[8] = {};
  const int key = (sig.l(0) < 0 ? 1 : 0) | (sig.l(1) < 0 ? 2 : 0) | (sig.l(2) < 0 ? 4 : 0);
  if (!built[key]) {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        const auto bp = blade_product(i, j, sig);
        tables[key].sign[i][j] = static_cast<int8_t>(bp.sign);
        tables[key].target[i][j] = static_cast<uint8_t>(bp.paper_idx);
      }
    built[key] = true;
  }
  return tables[key];
}

Multivector Multivector::scalar(Signature sig, QSqrt3 v) {
  Multivector m(sig);
  m.c_[kScalarIdx] = std::move(v);
  return m;
}

Multivector Multivector::blade(Signature sig, int paper_idx, QSqrt3 coeff) {
  if (paper_idx < 0 || paper_idx >= kDim) throw std::out_of_range("blade index");
  Multivector m(sig);
  m.c_[paper_idx] = std::move(coeff);
  return m;
}

bool Multivector::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool Multivector::is_scalar() const {
  for (int i = 1; i < kDim; ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

namespace {
void require_same_sig(const Multivector& x, const Multivector& y) {
  if (x.sig() != y.sig())
    throw std::invalid_argument("signature mismatch: " + x.sig().str() + " vs " + y.sig().str());
}
}  // namespace

Multivector Multivector::operator+(const Multivector& o) const {
  require_same_sig(*this, o);
  Multivector r(sig_);
  for (int i = 0; i < kDim; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
  require_same_sig(*this, o);
  Multivector r(sig_);
  for (int i = 0; i < kDim; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Multivector Multivector::operator-() const {
  Multivector r(sig_);
  for (int i = 0; i < kDim; ++i) r.c_[i] = -c_[i];
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_sig(*this, o);
  for (int i = 0; i < kDim; ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same_sig(*this, o);
  for (int i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
  return *this;
}

Multivector Multivector::scaled(const QSqrt3& s) const {
  Multivector r(sig_);
  for (int i = 0; i < kDim; ++i) r.c_[i] = c_[i] * s;
  return r;
}

int Multivector::cmp(const Multivector& x, const Multivector& y) {
  for (int i = 0; i < 3; ++i)
    if (x.sig_.lambda[i] != y.sig_.lambda[i]) return x.sig_.lambda[i] < y.sig_.lambda[i] ? -1 : 1;
  for (int i = 0; i < kDim; ++i) {
    const int c = QSqrt3::cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

Multivector geometric_product(const Multivector& x, const Multivector& y) {
  require_same_sig(x, y);
  const BladeTable& t = blade_table(x.sig());
  Multivector r(x.sig());
  for (int i = 0; i < kDim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < kDim; ++j) {
      if (y[j].is_zero()) continue;
      const QSqrt3 term = x[i] * y[j];
      if (t.sign[i][j] > 0)
        r[t.target[i][j]] += term;
      else
        r[t.target[i][j]] -= term;
    }
  }
  return r;
}

Multivector grade_project(const Multivector& x, int k) {
  if (k < 0 || k > 3) throw std::out_of_range("grade must be 0..3");
  Multivector r(x.sig());
  for (int i = 0; i < kDim; ++i)
    if (kGrade[i] == k) r[i] = x[i];
  return r;
}

std::pair<Multivector, Multivector> even_odd_split(const Multivector& x) {
  Multivector even(x.sig()), odd(x.sig());
  for (int i = 0; i < kDim; ++i)
    (kGrade[i] % 2 == 0 ? even : odd)[i] = x[i];
  return {even, odd};
}

Multivector pseudoscalar(Signature sig) { return Multivector::blade(sig, kPseudoIdx); }

std::pair<Multivector, Multivector> pseudoscalar_split(const Multivector& x) {
  const QSqrt3 half = QSqrt3::rational(1, 2);
  Multivector cplus = Multivector::scalar(x.sig(), half);
  cplus[kPseudoIdx] = half;
  Multivector cminus = Multivector::scalar(x.sig(), half);
  cminus[kPseudoIdx] = -half;
  return {geometric_product(x, cplus), geometric_product(x, cminus)};
}

const std::array<int, 4>& rot_basis_indices() {
  static const std::array<int, 4> idx = {0, 1, 2, 3};
  return idx;
}

const std::array<int, 2>& ps_basis_indices() {
  static const std::array<int, 2> idx = {0, 7};
  return idx;
}

bool subalgebra_membership(const Multivector& x, Subalgebra which) {
  for (int i = 0; i < kDim; ++i) {
    const bool inside = which == Subalgebra::Rot ? (kGrade[i] == 0 || kGrade[i] == 2)
                                                 : (i == kScalarIdx || i == kPseudoIdx);
    if (!inside && !x[i].is_zero()) return false;
  }
  return true;
}

}  // namespace clifcomp
