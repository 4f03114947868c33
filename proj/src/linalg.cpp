#include "clifcomp/linalg.hpp"

#include <stdexcept>

namespace clifcomp {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = QSqrt3(1);
  return m;
}

std::vector<QSqrt3> QMat::matvec(const std::vector<QSqrt3>& v) const {
  if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("matvec size mismatch");
  std::vector<QSqrt3> out(r_);
  for (int r = 0; r < r_; ++r)
    for (int c = 0; c < c_; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

QMat QMat::operator*(const QMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matmul size mismatch");
  QMat out(r_, o.c_);
  for (int r = 0; r < r_; ++r)
    for (int k = 0; k < c_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (int c = 0; c < o.c_; ++c)
        if (!o.at(k, c).is_zero()) out.at(r, c) += at(r, k) * o.at(k, c);
    }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    const QSqrt3 inv = *m.at(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const QSqrt3 f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(QMat a) { return static_cast<int>(rref(a).size()); }

bool is_invertible(const QMat& a) {
  return a.rows() == a.cols() && matrix_rank(a) == a.rows();
}

LinearSolution solve_linear(QMat a, std::vector<QSqrt3> b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("rhs size mismatch");
  const int n = a.cols();
  QMat aug(a.rows(), n + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  const std::vector<int> pivots = rref(aug);
  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == n) {
    sol.kind = LinearSolution::Kind::Inconsistent;
    return sol;
  }
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  sol.particular.assign(n, QSqrt3());
  for (size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug.at(static_cast<int>(i), n);
  if (static_cast<int>(pivots.size()) == n) {
    sol.kind = LinearSolution::Kind::Unique;
    return sol;
  }
  sol.kind = LinearSolution::Kind::Underdetermined;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<QSqrt3> v(n);
    v[free] = QSqrt3(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug.at(static_cast<int>(i), free);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::vector<std::vector<QSqrt3>> nullspace(QMat a) {
  const int n = a.cols();
  const std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<QSqrt3>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<QSqrt3> v(n);
    v[free] = QSqrt3(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QSqrt3> symmetric_diagonal(QMat g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("symmetric_diagonal: square input");
  const int n = g.rows();
  for (int k = 0; k < n; ++k) {
    if (g.at(k, k).is_zero()) {
      // Bring a nonzero onto the diagonal: first try a later diagonal entry,
      // otherwise add a row/column with g[k][j] != 0 (char 0, so this works).
      int swap_with = -1;
      for (int j = k + 1; j < n; ++j)
        if (!g.at(j, j).is_zero()) {
          swap_with = j;
          break;
        }
      if (swap_with >= 0) {
        for (int c = 0; c < n; ++c) std::swap(g.at(k, c), g.at(swap_with, c));
        for (int r = 0; r < n; ++r) std::swap(g.at(r, k), g.at(r, swap_with));
      } else {
        int j = -1;
        for (int c = k + 1; c < n; ++c)
          if (!g.at(k, c).is_zero()) {
            j = c;
            break;
          }
        if (j < 0) continue;  // entire row/col zero: degenerate direction
        for (int c = 0; c < n; ++c) g.at(k, c) += g.at(j, c);
        for (int r = 0; r < n; ++r) g.at(r, k) += g.at(r, j);
      }
    }
    if (g.at(k, k).is_zero()) continue;
    const QSqrt3 inv = *g.at(k, k).inverse();
    for (int r = k + 1; r < n; ++r) {
      if (g.at(r, k).is_zero()) continue;
      const QSqrt3 f = g.at(r, k) * inv;
      for (int c = 0; c < n; ++c) g.at(r, c) -= f * g.at(k, c);
      for (int c = 0; c < n; ++c) g.at(c, r) -= f * g.at(c, k);
    }
  }
  std::vector<QSqrt3> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = g.at(i, i);
  return diag;
}

std::pair<int, int> diag_signature(const std::vector<QSqrt3>& d) {
  int pos = 0, neg = 0;
  for (const auto& v : d) {
    const int s = v.sign();
    if (s > 0) ++pos;
    else if (s < 0) ++neg;
  }
  return {pos, neg};
}

namespace {

// Exact square root of a nonnegative rational, when it is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return mpq_class(0);
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den().get_mpz_t()))
    return std::nullopt;
  mpz_class num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), q.get_den().get_mpz_t());
  mpq_class r(num_root, den_root);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<QSqrt3> field_sqrt(const QSqrt3& v) {
  const int s = v.sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return QSqrt3();
  const mpq_class& a = v.rat_part();
  const mpq_class& b = v.s3_part();
  if (sgn(b) == 0) {
    // sqrt of a rational: either rational (x^2 = a) or a pure radical
    // (3 y^2 = a, giving y s3).
    if (auto x = rational_sqrt(a)) return QSqrt3(*x, mpq_class(0));
    if (auto y = rational_sqrt(mpq_class(a / 3))) return QSqrt3(mpq_class(0), *y);
    return std::nullopt;
  }
  // (x + y s3)^2 = a + b s3 with y = b/(2x):
  //   x^2 + 3 b^2/(4 x^2) = a  =>  x^2 = (a +- sqrt(a^2 - 3 b^2)) / 2.
  const auto disc = rational_sqrt(mpq_class(a * a - 3 * b * b));
  if (!disc) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    const mpq_class x2 = pick == 0 ? mpq_class((a + *disc) / 2) : mpq_class((a - *disc) / 2);
    const auto x = rational_sqrt(x2);
    if (!x || sgn(*x) == 0) continue;
    mpq_class y(b / (2 * *x));
    y.canonicalize();
    QSqrt3 root(*x, y);
    if (root * root == v) return root.sign() >= 0 ? root : -root;
  }
  return std::nullopt;
}

std::vector<QSqrt3> solve_quadratic(const QSqrt3& a, const QSqrt3& b, const QSqrt3& c) {
  std::vector<QSqrt3> roots;
  if (a.is_zero()) {
    if (!b.is_zero()) roots.push_back(-c / b);
    return roots;
  }
  const QSqrt3 disc = b * b - QSqrt3(4) * a * c;
  const auto s = field_sqrt(disc);
  if (!s) return roots;
  const QSqrt3 two_a = QSqrt3(2) * a;
  roots.push_back((-b + *s) / two_a);
  if (!s->is_zero()) roots.push_back((-b - *s) / two_a);
  return roots;
}

}  // namespace clifcomp
