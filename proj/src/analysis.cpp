#include "clifcomp/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace clifcomp {

namespace {

std::vector<int> domain_basis(Domain d) {
  switch (d) {
    case Domain::Full: return {0, 1, 2, 3, 4, 5, 6, 7};
    case Domain::Rot: return {0, 1, 2, 3};
    case Domain::Ps: return {0, 7};
    case Domain::Scalar: return {0};
  }
  throw std::logic_error("unknown domain");
}

int nonzero_coords(const Multivector& m) {
  int n = 0;
  for (int i = 0; i < kDim; ++i)
    if (!m[i].is_zero()) ++n;
  return n;
}

}  // namespace

NormId handle_norm(const AlgebraHandle& h) {
  switch (h.domain) {
    case Domain::Rot: return NormId::NTilde;
    case Domain::Ps: return NormId::NBar;
    case Domain::Full:
    case Domain::Scalar: return NormId::NStar;
  }
  throw std::logic_error("unknown domain");
}

AlgebraCtx::AlgebraCtx(AlgebraHandle handle) : h_(std::move(handle)) {
  if (h_.product == ProductId::RotParaTilde && h_.domain != Domain::Rot)
    throw std::invalid_argument("rot-para requires the Rot domain");
  if (h_.product == ProductId::PsParaBar && h_.domain != Domain::Ps)
    throw std::invalid_argument("ps-para requires the Ps domain");
  if (h_.domain == Domain::Rot && h_.product != ProductId::Clifford &&
      h_.product != ProductId::Dot && h_.product != ProductId::RotParaTilde)
    throw std::invalid_argument("the Rot domain supports clifford, dot and rot-para");
  if (h_.domain == Domain::Ps && h_.product != ProductId::Clifford &&
      h_.product != ProductId::PsParaBar)
    throw std::invalid_argument("the Ps domain supports clifford and ps-para");
  if (h_.domain == Domain::Scalar && h_.product != ProductId::Clifford &&
      h_.product != ProductId::Dot && h_.product != ProductId::Bullet)
    throw std::invalid_argument("the scalar domain supports clifford, dot and bullet");
  basis_ = domain_basis(h_.domain);
  for (int idx : basis_) basis_mv_.push_back(Multivector::blade(h_.sig, idx));
  const int n = dim();
  table_.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table_.push_back(apply_product(h_, basis_mv_[i], basis_mv_[j]));
  norm_ = handle_norm(h_);
}

Multivector AlgebraCtx::product(const Multivector& x, const Multivector& y) const {
  return apply_product(h_, x, y);
}

QSqrt3 AlgebraCtx::bilinear(const Multivector& x, const Multivector& y) const {
  return bilinear(norm_, x, y);
}

QSqrt3 AlgebraCtx::bilinear(NormId id, const Multivector& x, const Multivector& y) const {
  if (id == NormId::NStar || id == NormId::NDagger) {
    // Both norms carry the same diagonal weight pattern; polarization is
    // 2 * sum_i w_i x_i y_i.
    const auto w = norm_star_weights(h_.sig);
    QSqrt3 acc;
    for (int i = 0; i < kDim; ++i) {
      if (x[i].is_zero() || y[i].is_zero()) continue;
      const QSqrt3 t = x[i] * y[i];
      if (w[i] > 0)
        acc += t;
      else
        acc -= t;
    }
    return acc + acc;
  }
  return polarize(id, x, y);
}

std::vector<QSqrt3> AlgebraCtx::span_coords(const Multivector& x) const {
  std::vector<bool> inside(kDim, false);
  for (int idx : basis_) inside[idx] = true;
  for (int i = 0; i < kDim; ++i)
    if (!inside[i] && !x[i].is_zero())
      throw std::domain_error("element leaves the span of " + h_.str() + " at " + kBladeName[i]);
  std::vector<QSqrt3> c;
  c.reserve(basis_.size());
  for (int idx : basis_) c.push_back(x[idx]);
  return c;
}

Multivector AlgebraCtx::from_span_coords(const std::vector<QSqrt3>& c) const {
  if (c.size() != basis_.size()) throw std::invalid_argument("span coordinate count");
  Multivector m(h_.sig);
  for (size_t k = 0; k < basis_.size(); ++k) m[basis_[k]] = c[k];
  return m;
}

// ---------------------------------------------------------------------------
// Unit search
// ---------------------------------------------------------------------------

namespace {

// Linear system rows for "u is a one-sided unit": left means u o b = b.
void fill_unit_system(const AlgebraCtx& ctx, bool left, QMat& a, std::vector<QSqrt3>& rhs,
                      int row0) {
  const int n = ctx.dim();
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < kDim; ++m) {
      const int row = row0 + j * kDim + m;
      for (int i = 0; i < n; ++i)
        a.at(row, i) = left ? ctx.prod(i, j)[m] : ctx.prod(j, i)[m];
      rhs[row] = ctx.basis_mv(j)[m];
    }
}

std::optional<Multivector> solve_one_sided_unit(const AlgebraCtx& ctx, bool left) {
  const int n = ctx.dim();
  QMat a(n * kDim, n);
  std::vector<QSqrt3> rhs(n * kDim);
  fill_unit_system(ctx, left, a, rhs, 0);
  const auto sol = solve_linear(std::move(a), std::move(rhs));
  if (sol.kind != LinearSolution::Kind::Unique) return std::nullopt;
  return ctx.from_span_coords(sol.particular);
}

}  // namespace

UnitSearch find_unit(const AlgebraCtx& ctx) {
  const int n = ctx.dim();
  QMat a(2 * n * kDim, n);
  std::vector<QSqrt3> rhs(2 * n * kDim);
  fill_unit_system(ctx, true, a, rhs, 0);
  fill_unit_system(ctx, false, a, rhs, n * kDim);
  const auto sol = solve_linear(std::move(a), std::move(rhs));
  UnitSearch out;
  switch (sol.kind) {
    case LinearSolution::Kind::Unique:
      out.kind = UnitSearch::Kind::Unique;
      out.unit = ctx.from_span_coords(sol.particular);
      return out;
    case LinearSolution::Kind::Underdetermined:
      out.kind = UnitSearch::Kind::Degenerate;
      return out;
    case LinearSolution::Kind::Inconsistent: break;
  }
  out.kind = UnitSearch::Kind::None;
  // Evidence: a unique one-sided unit, when present, plus the first basis
  // element on which the opposite action fails.
  for (const bool right_first : {true, false}) {
    const bool left = !right_first;
    const auto cand = solve_one_sided_unit(ctx, left);
    if (!cand) continue;
    out.evidence_side = left ? "left" : "right";
    out.one_sided = cand;
    for (int j = 0; j < n; ++j) {
      const Multivector got = left ? ctx.product(ctx.basis_mv(j), *cand)
                                   : ctx.product(*cand, ctx.basis_mv(j));
      if (got != ctx.basis_mv(j)) {
        out.failing_basis = ctx.basis_indices()[j];
        out.failing_value = got;
        break;
      }
    }
    break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Paraunit search
// ---------------------------------------------------------------------------

namespace {

using Poly = std::array<QSqrt3, 4>;  // c0 + c1 x + c2 x^2 + c3 x^3

QSqrt3 poly_eval(const Poly& p, const QSqrt3& x) {
  return ((p[3] * x + p[2]) * x + p[1]) * x + p[0];
}

double embed(const QSqrt3& v, int dir) {
  static const double s3 = std::sqrt(3.0);
  return v.rat_part().get_d() + v.s3_part().get_d() * (dir > 0 ? s3 : -s3);
}

// Real roots of a cubic/quadratic/linear polynomial with double coefficients,
// Newton-polished.
std::vector<double> real_poly_roots(std::array<double, 4> c) {
  std::vector<double> roots;
  auto eval = [&](double x) { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; };
  auto deriv = [&](double x) { return (3 * c[3] * x + 2 * c[2]) * x + c[1]; };
  auto polish = [&](double x) {
    for (int it = 0; it < 60; ++it) {
      const double d = deriv(x);
      if (std::abs(d) < 1e-300) break;
      const double step = eval(x) / d;
      x -= step;
      if (std::abs(step) < 1e-15 * (1 + std::abs(x))) break;
    }
    return x;
  };
  if (std::abs(c[3]) < 1e-12) {
    if (std::abs(c[2]) < 1e-12) {
      if (std::abs(c[1]) > 1e-12) roots.push_back(-c[0] / c[1]);
      return roots;
    }
    const double disc = c[1] * c[1] - 4 * c[2] * c[0];
    if (disc >= 0) {
      roots.push_back((-c[1] + std::sqrt(disc)) / (2 * c[2]));
      roots.push_back((-c[1] - std::sqrt(disc)) / (2 * c[2]));
    }
    return roots;
  }
  // Monic depressed cubic x^3 + px + q via x = y - b/3.
  const double b = c[2] / c[3], c1 = c[1] / c[3], d0 = c[0] / c[3];
  const double p = c1 - b * b / 3;
  const double q = 2 * b * b * b / 27 - b * c1 / 3 + d0;
  const double shift = -b / 3;
  const double disc = -4 * p * p * p - 27 * q * q;
  if (disc > 0) {
    const double m = 2 * std::sqrt(-p / 3);
    const double theta = std::acos(std::clamp(3 * q / (p * m), -1.0, 1.0)) / 3;
    for (int k = 0; k < 3; ++k)
      roots.push_back(polish(shift + m * std::cos(theta - 2 * M_PI * k / 3)));
  } else {
    const double s = std::sqrt(std::max(0.0, q * q / 4 + p * p * p / 27));
    const double u = std::cbrt(-q / 2 + s), v = std::cbrt(-q / 2 - s);
    roots.push_back(polish(shift + u + v));
  }
  return roots;
}

std::optional<mpq_class> rationalize(double x, long max_den) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
  // Continued fractions with a denominator bound.
  double v = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 48; ++it) {
    const double fl = std::floor(v);
    if (std::abs(fl) > 4e18) return std::nullopt;
    const long a = static_cast<long>(fl);
    const long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(v - fl) < 1e-14) break;
    v = 1.0 / (v - fl);
  }
  if (q1 == 0) return std::nullopt;
  mpq_class r(p1, q1);
  r.canonicalize();
  if (std::abs(r.get_d() - x) > 1e-9 * (1 + std::abs(x))) return std::nullopt;
  return r;
}

// Roots of p inside Q(sqrt 3). Exact for degree <= 2. For genuine cubics a
// first root is proposed from the two real embeddings and verified exactly,
// then the polynomial is deflated to an exact quadratic. `complete` reports
// whether the enumeration is guaranteed exhaustive over the field.
std::vector<QSqrt3> field_poly_roots(const Poly& p, bool& complete) {
  complete = true;
  if (p[3].is_zero()) return solve_quadratic(p[2], p[1], p[0]);
  std::vector<QSqrt3> found;
  const auto plus_roots = real_poly_roots({embed(p[0], 1), embed(p[1], 1), embed(p[2], 1), embed(p[3], 1)});
  const auto minus_roots =
      real_poly_roots({embed(p[0], -1), embed(p[1], -1), embed(p[2], -1), embed(p[3], -1)});
  static const double s3 = std::sqrt(3.0);
  std::optional<QSqrt3> first;
  for (const double rp : plus_roots) {
    for (const double rm : minus_roots) {
      const auto a = rationalize((rp + rm) / 2, 1 << 16);
      const auto b = rationalize((rp - rm) / (2 * s3), 1 << 16);
      if (!a || !b) continue;
      const QSqrt3 cand(*a, *b);
      if (poly_eval(p, cand).is_zero()) {
        first = cand;
        break;
      }
    }
    if (first) break;
  }
  if (!first) {
    // A real cubic always has a real root; failing to reconstruct one in the
    // field usually means the root is irrational over Q(sqrt 3), but we
    // cannot certify that, so flag the enumeration as possibly partial.
    complete = false;
    return found;
  }
  found.push_back(*first);
  // Deflate: p = (x - r)(q2 x^2 + q1 x + q0).
  const QSqrt3 q2 = p[3];
  const QSqrt3 q1 = p[2] + q2 * *first;
  const QSqrt3 q0 = p[1] + q1 * *first;
  for (const auto& r : solve_quadratic(q2, q1, q0))
    if (std::find(found.begin(), found.end(), r) == found.end()) found.push_back(r);
  return found;
}

// All u in span{v} resp. span{v, w} with u o u = u, excluding zero.
std::vector<Multivector> centralizer_idempotents(const AlgebraCtx& ctx,
                                                 const std::vector<Multivector>& gens,
                                                 bool& complete) {
  complete = true;
  std::vector<Multivector> out;
  auto push_unique = [&](const Multivector& u) {
    if (u.is_zero()) return;
    if (ctx.product(u, u) != u) return;
    for (const auto& e : out)
      if (e == u) return;
    out.push_back(u);
  };
  if (gens.empty()) return out;
  if (gens.size() == 1) {
    const Multivector& s = gens[0];
    const Multivector p = ctx.product(s, s);
    // t^2 (s o s) = t s has a nonzero solution iff s o s = a s with a != 0.
    int pivot = -1;
    for (int i = 0; i < kDim; ++i)
      if (!s[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0 || p[pivot].is_zero()) return out;
    const QSqrt3 alpha = p[pivot] / s[pivot];
    if (p != s.scaled(alpha)) return out;
    push_unique(s.scaled(*alpha.inverse()));
    return out;
  }
  if (gens.size() == 2) {
    const Multivector& v = gens[0];
    const Multivector& w = gens[1];
    const Multivector P = ctx.product(v, v);
    const Multivector Q = ctx.product(v, w) + ctx.product(w, v);
    const Multivector R = ctx.product(w, w);
    // Coordinatewise: P_m s^2 + Q_m s t + R_m t^2 = v_m s + w_m t.
    // t = 0 branch: s P = v with s != 0.
    {
      int m = -1;
      for (int i = 0; i < kDim; ++i)
        if (!P[i].is_zero()) {
          m = i;
          break;
        }
      if (m >= 0) {
        const QSqrt3 s = v[m] / P[m];
        if (!s.is_zero() && P.scaled(s) == v) push_unique(v.scaled(s));
      }
    }
    // s = 0 branch.
    {
      int m = -1;
      for (int i = 0; i < kDim; ++i)
        if (!R[i].is_zero()) {
          m = i;
          break;
        }
      if (m >= 0) {
        const QSqrt3 t = w[m] / R[m];
        if (!t.is_zero() && R.scaled(t) == w) push_unique(w.scaled(t));
      }
    }
    // Both nonzero: with sigma = s/t, eliminating t between coordinates m, m'
    // gives (v_m sigma + w_m) D_m'(sigma) = (v_m' sigma + w_m') D_m(sigma)
    // where D_m(sigma) = P_m sigma^2 + Q_m sigma + R_m.
    Poly rel{};
    bool have_rel = false;
    for (int m = 0; m < kDim && !have_rel; ++m)
      for (int mp = m + 1; mp < kDim && !have_rel; ++mp) {
        Poly r{};
        // (v_m x + w_m)(P_mp x^2 + Q_mp x + R_mp) - (v_mp x + w_mp)(P_m x^2 + Q_m x + R_m)
        r[3] = v[m] * P[mp] - v[mp] * P[m];
        r[2] = v[m] * Q[mp] + w[m] * P[mp] - v[mp] * Q[m] - w[mp] * P[m];
        r[1] = v[m] * R[mp] + w[m] * Q[mp] - v[mp] * R[m] - w[mp] * Q[m];
        r[0] = w[m] * R[mp] - w[mp] * R[m];
        if (!r[0].is_zero() || !r[1].is_zero() || !r[2].is_zero() || !r[3].is_zero()) {
          rel = r;
          have_rel = true;
        }
      }
    if (!have_rel) {
      // Every pair of coordinate equations is proportional: a degenerate
      // variety we do not enumerate.
      complete = false;
      return out;
    }
    bool cubic_complete = true;
    for (const auto& sigma : field_poly_roots(rel, cubic_complete)) {
      // Recover t from a coordinate with nonzero denominator.
      for (int m = 0; m < kDim; ++m) {
        const QSqrt3 den = (P[m] * sigma + Q[m]) * sigma + R[m];
        if (den.is_zero()) continue;
        const QSqrt3 t = (v[m] * sigma + w[m]) / den;
        push_unique(v.scaled(sigma * t) + w.scaled(t));
        break;
      }
    }
    if (!cubic_complete) complete = false;
    return out;
  }
  complete = false;  // centralizer of dimension > 2: not expected here
  return out;
}

}  // namespace

ParaunitSearch find_paraunit(const AlgebraCtx& ctx) {
  const int n = ctx.dim();
  // Centrality u o b = b o u for every basis b is linear in u.
  QMat a(n * kDim, n);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < kDim; ++m)
      for (int i = 0; i < n; ++i)
        a.at(j * kDim + m, i) = ctx.prod(i, j)[m] - ctx.prod(j, i)[m];
  const auto central = nullspace(std::move(a));
  ParaunitSearch out;
  out.centralizer_dim = static_cast<int>(central.size());
  std::vector<Multivector> gens;
  for (const auto& coords : central) gens.push_back(ctx.from_span_coords(coords));
  bool complete = true;
  const auto idempotents = centralizer_idempotents(ctx, gens, complete);
  out.search_complete = complete;
  out.central_idempotents = idempotents;
  for (const auto& u : idempotents) {
    // Left action must be an involution and must move something.
    bool involutive = true, moves = false;
    for (int j = 0; j < n && involutive; ++j) {
      const Multivector once = ctx.product(u, ctx.basis_mv(j));
      if (ctx.product(u, once) != ctx.basis_mv(j)) involutive = false;
      if (once != ctx.basis_mv(j)) moves = true;
    }
    if (involutive && moves) out.all.push_back(u);
  }
  std::sort(out.all.begin(), out.all.end(), [](const Multivector& x, const Multivector& y) {
    const int nx = nonzero_coords(x), ny = nonzero_coords(y);
    if (nx != ny) return nx < ny;
    return Multivector::cmp(x, y) < 0;
  });
  if (!out.all.empty()) out.canonical = out.all.front();
  return out;
}

// ---------------------------------------------------------------------------
// Identity sweeps
// ---------------------------------------------------------------------------

CheckResult verify_composition(const AlgebraCtx& ctx, NormId norm) {
  const int n = ctx.dim();
  // Scalar-valuedness of the polarized form on the span; n~ genuinely takes
  // values in Ps on the full carrier, which violates the precondition.
  if (norm == NormId::NTilde) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Multivector full =
            geometric_product(ctx.basis_mv(i), clifford_conjugation(ctx.basis_mv(j))) +
            geometric_product(ctx.basis_mv(j), clifford_conjugation(ctx.basis_mv(i)));
        for (int m = 1; m < kDim; ++m)
          if (!full[m].is_zero())
            throw std::invalid_argument("ntilde is not scalar-valued on this domain");
      }
  }
  if (norm == NormId::NBar)
    for (int idx : ctx.basis_indices())
      if (idx != kScalarIdx && idx != kPseudoIdx)
        throw std::invalid_argument("nbar requires the Ps domain");

  std::vector<QSqrt3> bb(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bb[i * n + j] = ctx.bilinear(norm, ctx.basis_mv(i), ctx.basis_mv(j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const QSqrt3 lhs = ctx.bilinear(norm, ctx.prod(i, k), ctx.prod(j, l)) +
                             ctx.bilinear(norm, ctx.prod(i, l), ctx.prod(j, k));
          const QSqrt3 rhs = bb[i * n + j] * bb[k * n + l];
          if (lhs != rhs) {
            Witness w;
            w.check = "composition(" + norm_name(norm) + ")";
            w.elems = {{"b_i", ctx.basis_mv(i)},
                       {"b_j", ctx.basis_mv(j)},
                       {"b_k", ctx.basis_mv(k)},
                       {"b_l", ctx.basis_mv(l)}};
            w.values = {{"lhs", lhs}, {"rhs", rhs}};
            w.note = "B(bi.bk, bj.bl) + B(bi.bl, bj.bk) != B(bi,bj) B(bk,bl)";
            return CheckResult::fail(std::move(w));
          }
        }
  return CheckResult::ok();
}

std::string flag_name(AlgFlag f) {
  switch (f) {
    case AlgFlag::Commutative: return "commutative";
    case AlgFlag::Associative: return "associative";
    case AlgFlag::Alternative: return "alternative";
    case AlgFlag::Flexible: return "flexible";
  }
  throw std::logic_error("unknown flag");
}

namespace {

Multivector associator(const AlgebraCtx& ctx, const Multivector& x, const Multivector& y,
                       const Multivector& z) {
  return ctx.product(ctx.product(x, y), z) - ctx.product(x, ctx.product(y, z));
}

}  // namespace

CheckResult check_flag(const AlgebraCtx& ctx, AlgFlag f) {
  const int n = ctx.dim();
  if (f == AlgFlag::Commutative) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (ctx.prod(i, j) != ctx.prod(j, i)) {
          Witness w;
          w.check = "commutative";
          w.elems = {{"x", ctx.basis_mv(i)}, {"y", ctx.basis_mv(j)}};
          w.sides = {{"x.y", ctx.prod(i, j)}, {"y.x", ctx.prod(j, i)}};
          return CheckResult::fail(std::move(w));
        }
    return CheckResult::ok();
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Multivector& a = ctx.basis_mv(i);
        const Multivector& b = ctx.basis_mv(j);
        const Multivector& y = ctx.basis_mv(k);
        bool ok = true;
        Multivector lhs(ctx.handle().sig);
        switch (f) {
          case AlgFlag::Associative:
            lhs = associator(ctx, a, b, y);
            ok = lhs.is_zero();
            break;
          case AlgFlag::Alternative:
            // Linearized left and right alternative laws.
            lhs = associator(ctx, a, b, y) + associator(ctx, b, a, y);
            ok = lhs.is_zero();
            if (ok) {
              lhs = associator(ctx, y, a, b) + associator(ctx, y, b, a);
              ok = lhs.is_zero();
            }
            break;
          case AlgFlag::Flexible:
            lhs = associator(ctx, a, y, b) + associator(ctx, b, y, a);
            ok = lhs.is_zero();
            break;
          case AlgFlag::Commutative: break;
        }
        if (!ok) {
          Witness w;
          w.check = flag_name(f);
          w.elems = {{"a", a}, {"b", b}, {"y", y}};
          w.sides = {{"defect", lhs}};
          return CheckResult::fail(std::move(w));
        }
      }
  return CheckResult::ok();
}

CheckResult symmetric_composition_check(const AlgebraCtx& ctx, NormId norm) {
  const int n = ctx.dim();
  // Polarized in x: x1 o (y o x2) + x2 o (y o x1) = B(x1,x2) y, and the
  // mirror identity with the products on the left.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Multivector& x1 = ctx.basis_mv(i);
        const Multivector& x2 = ctx.basis_mv(j);
        const Multivector& y = ctx.basis_mv(k);
        const QSqrt3 b12 = ctx.bilinear(norm, x1, x2);
        const Multivector rhs = y.scaled(b12);
        const Multivector lhs1 = ctx.product(x1, ctx.prod(k, j)) + ctx.product(x2, ctx.prod(k, i));
        if (lhs1 != rhs) {
          Witness w;
          w.check = "symmetric_composition(" + norm_name(norm) + ")";
          w.elems = {{"x1", x1}, {"x2", x2}, {"y", y}};
          w.sides = {{"x1.(y.x2)+x2.(y.x1)", lhs1}, {"B(x1,x2) y", rhs}};
          return CheckResult::fail(std::move(w));
        }
        const Multivector lhs2 = ctx.product(ctx.prod(i, k), x2) + ctx.product(ctx.prod(j, k), x1);
        if (lhs2 != rhs) {
          Witness w;
          w.check = "symmetric_composition(" + norm_name(norm) + ")";
          w.elems = {{"x1", x1}, {"x2", x2}, {"y", y}};
          w.sides = {{"(x1.y).x2+(x2.y).x1", lhs2}, {"B(x1,x2) y", rhs}};
          return CheckResult::fail(std::move(w));
        }
      }
  return CheckResult::ok();
}

int derivation_dimension(const AlgebraCtx& ctx) {
  const int n = ctx.dim();
  // Unknowns D_{rc} (r, c in basis positions), equations indexed by
  // (i, j, m): coordinate m of D(bi o bj) - D(bi) o bj - bi o D(bj) = 0.
  std::vector<std::vector<QSqrt3>> coords(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) coords[i * n + j] = ctx.span_coords(ctx.prod(i, j));
  QMat a(n * n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        const int row = (i * n + j) * n + m;
        for (int k = 0; k < n; ++k) {
          if (!coords[i * n + j][k].is_zero()) a.at(row, m * n + k) += coords[i * n + j][k];
          if (!coords[k * n + j][m].is_zero()) a.at(row, k * n + i) -= coords[k * n + j][m];
          if (!coords[i * n + k][m].is_zero()) a.at(row, k * n + j) -= coords[i * n + k][m];
        }
      }
  return n * n - matrix_rank(std::move(a));
}

// ---------------------------------------------------------------------------
// Intrinsic norm from a unit
// ---------------------------------------------------------------------------

namespace {

// Solve x o x = t x - q u exactly; fails when the square leaves span{x, u}.
struct TraceNorm {
  bool ok;
  QSqrt3 t, q;
  std::string error;
};

TraceNorm trace_norm_of(const AlgebraCtx& ctx, const Multivector& u, const Multivector& x) {
  const Multivector sq = ctx.product(x, x);
  QMat a(kDim, 2);
  std::vector<QSqrt3> rhs(kDim);
  for (int m = 0; m < kDim; ++m) {
    a.at(m, 0) = x[m];
    a.at(m, 1) = u[m];
    rhs[m] = sq[m];
  }
  const auto sol = solve_linear(std::move(a), std::move(rhs));
  if (sol.kind == LinearSolution::Kind::Inconsistent)
    return {false, QSqrt3(), QSqrt3(), "x o x leaves span{x, u}"};
  if (sol.kind == LinearSolution::Kind::Underdetermined)
    return {false, QSqrt3(), QSqrt3(), "x is collinear with the unit"};
  return {true, sol.particular[0], -sol.particular[1], ""};
}

std::optional<QSqrt3> collinear_factor(const Multivector& x, const Multivector& u) {
  // x = s u, if such s exists.
  int pivot = -1;
  for (int m = 0; m < kDim; ++m)
    if (!u[m].is_zero()) {
      pivot = m;
      break;
    }
  if (pivot < 0) return std::nullopt;
  const QSqrt3 s = x[pivot] / u[pivot];
  if (u.scaled(s) == x) return s;
  return std::nullopt;
}

}  // namespace

IntrinsicNorm intrinsic_norm_from_unit(const AlgebraCtx& ctx, const Multivector& unit) {
  IntrinsicNorm out;
  const int n = ctx.dim();
  auto norm_of = [&](const Multivector& x) -> std::optional<QSqrt3> {
    if (const auto s = collinear_factor(x, unit)) return *s * *s;
    const auto tn = trace_norm_of(ctx, unit, x);
    if (!tn.ok) {
      out.error = tn.error;
      return std::nullopt;
    }
    return tn.q;
  };
  std::vector<QSqrt3> diag(n);
  for (int i = 0; i < n; ++i) {
    const auto v = norm_of(ctx.basis_mv(i));
    if (!v) return out;
    diag[i] = *v;
  }
  out.gram = QMat(n, n);
  for (int i = 0; i < n; ++i) out.gram.at(i, i) = diag[i];
  const QSqrt3 half = QSqrt3::rational(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto v = norm_of(ctx.basis_mv(i) + ctx.basis_mv(j));
      if (!v) return out;
      const QSqrt3 off = (*v - diag[i] - diag[j]) * half;
      out.gram.at(i, j) = off;
      out.gram.at(j, i) = off;
    }
  out.ok = true;
  out.signature = diag_signature(symmetric_diagonal(out.gram));
  out.matches_handle_norm = true;
  for (int i = 0; i < n && out.matches_handle_norm; ++i)
    for (int j = 0; j < n; ++j) {
      const QSqrt3 b = ctx.bilinear(ctx.basis_mv(i), ctx.basis_mv(j));
      if (out.gram.at(i, j) + out.gram.at(i, j) != b) {
        out.matches_handle_norm = false;
        break;
      }
    }
  return out;
}

CheckResult automorphism_check(const AlgebraCtx& ctx, const QMat& m) {
  if (ctx.handle().domain != Domain::Full)
    throw std::invalid_argument("automorphism_check runs on the full carrier");
  if (m.rows() != kDim || m.cols() != kDim || !is_invertible(m))
    throw std::invalid_argument("automorphism candidate must be an invertible 8x8 matrix");
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const Multivector lhs = TauMap::apply_mat(m, ctx.prod(i, j));
      const Multivector rhs = ctx.product(TauMap::apply_mat(m, ctx.basis_mv(i)),
                                          TauMap::apply_mat(m, ctx.basis_mv(j)));
      if (lhs != rhs) {
        Witness w;
        w.check = "automorphism";
        w.elems = {{"x", ctx.basis_mv(i)}, {"y", ctx.basis_mv(j)}};
        w.sides = {{"m(x.y)", lhs}, {"m(x).m(y)", rhs}};
        return CheckResult::fail(std::move(w));
      }
    }
  return CheckResult::ok();
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

std::string label_for_signature(int dim, std::pair<int, int> s, const std::string& base,
                                const std::string& split) {
  if (dim == 8) {
    if (s == std::pair<int, int>(8, 0)) return base;
    if (s == std::pair<int, int>(4, 4)) return split;
  } else if (dim == 4) {
    if (s == std::pair<int, int>(4, 0)) return base;
    if (s == std::pair<int, int>(2, 2)) return split;
  } else if (dim == 2) {
    if (s == std::pair<int, int>(2, 0)) return base;
    if (s == std::pair<int, int>(1, 1)) return split;
  } else if (dim == 1 && s == std::pair<int, int>(1, 0)) {
    return base;
  }
  return "unrecognized";
}

std::string family_base(int dim, const std::string& prefix) {
  switch (dim) {
    case 8: return prefix + "O";
    case 4: return prefix + "H";
    case 2: return prefix + "C";
    case 1: return prefix + "R";
  }
  return "unrecognized";
}

}  // namespace

PropertyReport classify(const AlgebraHandle& h) {
  const AlgebraCtx ctx(h);
  PropertyReport r;
  r.handle = h;
  r.norm = ctx.norm();
  r.unit = find_unit(ctx);
  r.paraunit = find_paraunit(ctx);
  r.commutative = check_flag(ctx, AlgFlag::Commutative);
  r.associative = check_flag(ctx, AlgFlag::Associative);
  r.alternative = check_flag(ctx, AlgFlag::Alternative);
  r.flexible = check_flag(ctx, AlgFlag::Flexible);
  r.composition = verify_composition(ctx, ctx.norm());
  r.symmetric_composition = symmetric_composition_check(ctx, ctx.norm());
  r.der_dim = derivation_dimension(ctx);

  const int n = ctx.dim();
  QMat bgram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bgram.at(i, j) = ctx.bilinear(ctx.basis_mv(i), ctx.basis_mv(j));
  r.norm_signature = diag_signature(symmetric_diagonal(std::move(bgram)));

  if (r.unit.kind == UnitSearch::Kind::Unique) {
    r.idempotent = r.unit.unit;
  } else if (r.paraunit.canonical) {
    r.idempotent = r.paraunit.canonical;
  } else {
    for (int i = 0; i < n; ++i)
      if (ctx.prod(i, i) == ctx.basis_mv(i)) {
        r.idempotent = ctx.basis_mv(i);
        break;
      }
  }

  const bool has_unit = r.unit.kind == UnitSearch::Kind::Unique;
  const bool has_paraunit = r.paraunit.canonical.has_value();
  if (has_unit) {
    r.intrinsic = intrinsic_norm_from_unit(ctx, *r.unit.unit);
    if (r.composition.holds && r.intrinsic.ok)
      r.label = label_for_signature(n, r.intrinsic.signature, family_base(n, ""),
                                    family_base(n, "") + "_s");
  } else if (has_paraunit) {
    if (r.symmetric_composition.holds)
      r.label = label_for_signature(n, r.norm_signature, family_base(n, "p"),
                                    family_base(n, "p") + "_s");
  } else if (r.unit.kind == UnitSearch::Kind::None && r.paraunit.search_complete) {
    if (n == 8 && r.symmetric_composition.holds && r.der_dim == 8)
      r.label = label_for_signature(n, r.norm_signature, "Oku", "Oku_s");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Biquaternionic decomposition
// ---------------------------------------------------------------------------

std::pair<Multivector, Multivector> biquaternion_decompose(const Multivector& x) {
  const auto [even, odd] = even_odd_split(x);
  const Multivector c = pseudoscalar(x.sig());
  const int csq = -x.sig().lambda_product();  // c^2
  Multivector q1 = geometric_product(odd, c);
  if (csq < 0) q1 = -q1;  // c^{-1} = c / c^2
  return {even, q1};
}

Multivector biquaternion_recompose(const Multivector& q0, const Multivector& q1) {
  return q0 + geometric_product(q1, pseudoscalar(q0.sig()));
}

CheckResult biquaternion_involution_rows(const Signature& sig) {
  for (int i = 0; i < kDim; ++i) {
    const Multivector b = Multivector::blade(sig, i);
    const auto [q0, q1] = biquaternion_decompose(b);
    struct Row {
      const char* name;
      Multivector lhs;
      Multivector q0t;
      Multivector q1t;
    };
    // Rows: reversion = zbar (x) qtilde, inversion = zbar (x) q,
    // Clifford conjugation = z (x) qtilde; zbar negates the c factor.
    const Row rows[3] = {
        {"reversion", reversion(b), clifford_conjugation(q0), -clifford_conjugation(q1)},
        {"inversion", grade_inversion(b), q0, -q1},
        {"clifford_conjugation", clifford_conjugation(b), clifford_conjugation(q0),
         clifford_conjugation(q1)},
    };
    for (const auto& row : rows) {
      const Multivector rhs = biquaternion_recompose(row.q0t, row.q1t);
      if (row.lhs != rhs) {
        Witness w;
        w.check = std::string("biquaternion_row(") + row.name + ")";
        w.elems = {{"blade", b}};
        w.sides = {{"involution", row.lhs}, {"tensor_action", rhs}};
        w.note = "signature " + sig.str();
        return CheckResult::fail(std::move(w));
      }
    }
  }
  return CheckResult::ok();
}

}  // namespace clifcomp
