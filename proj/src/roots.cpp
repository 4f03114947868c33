#include "clifcomp/roots.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "clifcomp/mv_expr.hpp"

namespace clifcomp {

namespace {

struct ValueLess {
  bool operator()(const QSqrt3& a, const QSqrt3& b) const { return (a - b).sign() < 0; }
};

}  // namespace

bool VectorSet::contains(const Multivector& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

VectorSet make_vector_set(Signature sig, NormId form, std::vector<Multivector> elems) {
  VectorSet s;
  s.sig = sig;
  s.form = form;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  s.elements = std::move(elems);
  return s;
}

const std::vector<QSqrt3>& default_grid() {
  static const std::vector<QSqrt3> g = {QSqrt3(0), QSqrt3(1), QSqrt3(-1),
                                        QSqrt3::rational(1, 2), QSqrt3::rational(-1, 2)};
  return g;
}

VectorSet enumerate_norm_units(Signature sig, NormId form, Domain domain,
                               const std::vector<QSqrt3>& grid) {
  std::vector<int> coords;
  switch (domain) {
    case Domain::Full: coords = {0, 1, 2, 3, 4, 5, 6, 7}; break;
    case Domain::Rot: coords = {0, 1, 2, 3}; break;
    case Domain::Ps: coords = {0, 7}; break;
    case Domain::Scalar: coords = {0}; break;
  }
  const size_t g = grid.size();
  double total = 1;
  for (size_t k = 0; k < coords.size(); ++k) total *= static_cast<double>(g);
  if (total > 1e7) throw std::invalid_argument("grid too large (over 10^7 candidates)");
  std::vector<Multivector> found;
  std::vector<size_t> odo(coords.size(), 0);
  const QSqrt3 one(1);
  while (true) {
    Multivector m(sig);
    for (size_t k = 0; k < coords.size(); ++k) m[coords[k]] = grid[odo[k]];
    if (norm_value(form, m) == one) found.push_back(std::move(m));
    size_t k = 0;
    for (; k < odo.size(); ++k) {
      if (++odo[k] < g) break;
      odo[k] = 0;
    }
    if (k == odo.size()) break;
  }
  return make_vector_set(sig, form, std::move(found));
}

// ---------------------------------------------------------------------------
// Closure
// ---------------------------------------------------------------------------

namespace {

// Fast representation: integer coordinates over a power-of-two denominator.
struct IntVec {
  std::array<int64_t, 8> c;
  int64_t den;  // power of two

  void normalize() {
    while (den > 1) {
      bool all_even = (den % 2) == 0;
      for (const int64_t v : c) all_even = all_even && (v % 2 == 0);
      if (!all_even) break;
      den /= 2;
      for (auto& v : c) v /= 2;
    }
  }
  bool operator<(const IntVec& o) const {
    if (den != o.den) return den < o.den;
    return c < o.c;
  }
  IntVec operator-() const {
    IntVec r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
};

// Structure constants with integer coordinates, when the product has them.
struct IntTensor {
  std::vector<std::pair<int, int64_t>> entry[8][8];
};

std::optional<int64_t> exact_int64(const mpq_class& q) {
  if (q.get_den() != 1) return std::nullopt;
  if (!q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

std::optional<IntTensor> build_int_tensor(const AlgebraHandle& h) {
  if (h.domain != Domain::Full) return std::nullopt;
  IntTensor t;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const Multivector p =
          apply_product(h, Multivector::blade(h.sig, i), Multivector::blade(h.sig, j));
      for (int m = 0; m < kDim; ++m) {
        if (p[m].is_zero()) continue;
        if (!p[m].is_rational()) return std::nullopt;
        const auto v = exact_int64(p[m].rat_part());
        if (!v) return std::nullopt;
        t.entry[i][j].push_back({m, *v});
      }
    }
  return t;
}

std::optional<IntVec> to_intvec(const Multivector& m) {
  // Common power-of-two denominator up to 2^12.
  int64_t den = 1;
  for (int i = 0; i < kDim; ++i) {
    if (!m[i].is_rational()) return std::nullopt;
    const mpz_class& d = m[i].rat_part().get_den();
    if (!d.fits_slong_p()) return std::nullopt;
    int64_t dv = d.get_si();
    while (den < dv) den *= 2;
    if (den > (1 << 12) || den % dv != 0) return std::nullopt;
  }
  IntVec v{};
  v.den = den;
  for (int i = 0; i < kDim; ++i) {
    const mpq_class scaled = m[i].rat_part() * den;
    const auto n = exact_int64(scaled);
    if (!n) return std::nullopt;
    v.c[i] = *n;
  }
  v.normalize();
  return v;
}

Multivector from_intvec(const IntVec& v, Signature sig) {
  Multivector m(sig);
  for (int i = 0; i < kDim; ++i) {
    mpq_class q(v.c[i], v.den);
    q.canonicalize();
    m[i] = QSqrt3(std::move(q), mpq_class(0));
  }
  return m;
}

// Worklist saturation over IntVec; nullopt signals an arithmetic bailout
// (the caller falls back to the exact path).
std::optional<std::pair<bool, std::vector<IntVec>>> closure_int(const IntTensor& t,
                                                                std::vector<IntVec> seed,
                                                                int cap) {
  std::set<IntVec> seen;
  std::vector<IntVec> list;
  bool overflow = false;
  auto add = [&](const IntVec& v) {
    if (seen.insert(v).second) list.push_back(v);
  };
  for (auto& s : seed) {
    s.normalize();
    add(s);
    add(-s);
  }
  constexpr int64_t kDenCap = int64_t(1) << 40;
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (int dir = 0; dir < 2; ++dir) {
        const IntVec& x = dir == 0 ? list[i] : list[j];
        const IntVec& y = dir == 0 ? list[j] : list[i];
        IntVec z{};
        z.den = x.den * y.den;
        if (z.den > kDenCap) return std::nullopt;
        for (int a = 0; a < kDim; ++a) {
          if (x.c[a] == 0) continue;
          for (int b = 0; b < kDim; ++b) {
            if (y.c[b] == 0) continue;
            const __int128 prod = static_cast<__int128>(x.c[a]) * y.c[b];
            for (const auto& [m, coef] : t.entry[a][b]) {
              const __int128 acc = static_cast<__int128>(z.c[m]) + prod * coef;
              if (acc > INT64_MAX || acc < INT64_MIN) {
                overflow = true;
              } else {
                z.c[m] = static_cast<int64_t>(acc);
              }
            }
          }
        }
        if (overflow) return std::nullopt;
        z.normalize();
        add(z);
        add(-z);
        if (static_cast<int>(seen.size()) > cap)
          return std::make_pair(true, std::vector<IntVec>{});
      }
    }
  }
  return std::make_pair(false, std::vector<IntVec>(seen.begin(), seen.end()));
}

std::pair<bool, std::vector<Multivector>> closure_exact(const AlgebraHandle& h,
                                                        const std::vector<Multivector>& seed,
                                                        int cap) {
  std::set<Multivector> seen;
  std::vector<Multivector> list;
  auto add = [&](const Multivector& v) {
    if (seen.insert(v).second) list.push_back(v);
  };
  for (const auto& s : seed) {
    add(s);
    add(-s);
  }
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j <= i; ++j)
      for (int dir = 0; dir < 2; ++dir) {
        const Multivector z =
            dir == 0 ? apply_product(h, list[i], list[j]) : apply_product(h, list[j], list[i]);
        add(z);
        add(-z);
        if (static_cast<int>(seen.size()) > cap) return {true, {}};
      }
  return {false, std::vector<Multivector>(seen.begin(), seen.end())};
}

}  // namespace

ClosureResult product_closure(const VectorSet& seed, const AlgebraHandle& h, int cap) {
  if (cap < static_cast<int>(seed.elements.size()))
    throw std::invalid_argument("closure cap below seed size");
  ClosureResult out;
  out.set.sig = seed.sig;
  out.set.form = seed.form;
  const auto tensor = build_int_tensor(h);
  if (tensor) {
    std::vector<IntVec> iv;
    bool ok = true;
    for (const auto& e : seed.elements) {
      const auto v = to_intvec(e);
      if (!v) {
        ok = false;
        break;
      }
      iv.push_back(*v);
    }
    if (ok) {
      const auto res = closure_int(*tensor, std::move(iv), cap);
      if (res) {
        if (res->first) {
          out.cap_exceeded = true;
          return out;
        }
        std::vector<Multivector> elems;
        elems.reserve(res->second.size());
        for (const auto& v : res->second) elems.push_back(from_intvec(v, seed.sig));
        out.set = make_vector_set(seed.sig, seed.form, std::move(elems));
        return out;
      }
      out.note = "integer path overflowed; exact fallback";
    }
  }
  const auto [capped, elems] = closure_exact(h, seed.elements, cap);
  out.cap_exceeded = capped;
  if (!capped) out.set = make_vector_set(seed.sig, seed.form, elems);
  return out;
}

// ---------------------------------------------------------------------------
// Root system identification
// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

using Hist = std::map<QSqrt3, int, ValueLess>;

Hist d4_hist() {
  return {{QSqrt3(2), 1}, {QSqrt3(1), 8}, {QSqrt3(0), 6}, {QSqrt3(-1), 8}, {QSqrt3(-2), 1}};
}

Hist e8_hist() {
  return {{QSqrt3(2), 1}, {QSqrt3(1), 56}, {QSqrt3(0), 126}, {QSqrt3(-1), 56}, {QSqrt3(-2), 1}};
}

}  // namespace

RootSystemReport identify_root_system(const VectorSet& set) {
  RootSystemReport rep;
  const int n = static_cast<int>(set.elements.size());
  rep.count = n;
  if (n == 0) throw std::invalid_argument("empty vector set");

  std::vector<QSqrt3> norms(n);
  std::set<QSqrt3, ValueLess> distinct;
  for (int i = 0; i < n; ++i) {
    norms[i] = norm_value(set.form, set.elements[i]);
    if (norms[i].is_zero()) throw std::invalid_argument("zero-norm element in root candidate set");
    distinct.insert(norms[i]);
  }
  rep.length_classes = static_cast<int>(distinct.size());
  if (rep.length_classes > 2) throw std::invalid_argument("mixed norms in root candidate set");
  const QSqrt3 nu_min = *distinct.begin();
  if (rep.length_classes == 2) {
    const QSqrt3 ratio = *std::next(distinct.begin()) / nu_min;
    if (ratio != QSqrt3(2)) throw std::invalid_argument("mixed norms in root candidate set");
  }

  // Exact span rank.
  {
    QMat m(n, kDim);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < kDim; ++c) m.at(i, c) = set.elements[i][c];
    rep.rank = matrix_rank(std::move(m));
  }

  if (nu_min.sign() <= 0) return rep;  // indefinite direction: no catalog match

  // Pairing scaled so short roots have <x,x> = 2.
  const AlgebraCtx ctx(AlgebraHandle::make(set.sig, ProductId::Clifford));
  const QSqrt3 inv_nu = *nu_min.inverse();
  std::vector<Hist> per_root(n);
  UnionFind uf(n);
  std::vector<std::vector<QSqrt3>> ip(n, std::vector<QSqrt3>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const QSqrt3 v = ctx.bilinear(set.form, set.elements[i], set.elements[j]) * inv_nu;
      ip[i][j] = v;
      ip[j][i] = v;
      if (i != j && !v.is_zero()) uf.unite(i, j);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) per_root[i][ip[i][j]] += 1;

  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < n; ++i) comps[uf.find(i)].push_back(i);
  for (const auto& [root, members] : comps) rep.component_sizes.push_back(members.size());
  std::sort(rep.component_sizes.begin(), rep.component_sizes.end());

  rep.uniform_histogram = true;
  for (int i = 1; i < n; ++i)
    if (per_root[i] != per_root[0]) {
      rep.uniform_histogram = false;
      break;
    }
  if (rep.uniform_histogram)
    for (const auto& [value, cnt] : per_root[0]) rep.histogram.push_back({value, cnt});

  // Catalog matching.
  const int ncomp = static_cast<int>(comps.size());
  if (rep.length_classes == 1) {
    if (n == 24 && rep.rank == 4 && ncomp == 1 && rep.uniform_histogram && per_root[0] == d4_hist()) {
      rep.type_label = "D4";
    } else if (n == 240 && rep.rank == 8 && ncomp == 1 && rep.uniform_histogram &&
               per_root[0] == e8_hist()) {
      rep.type_label = "E8";
    } else if (n == 48 && rep.rank == 8 && ncomp == 2) {
      // Two orthogonal D4 blocks: check each component's internal histogram.
      bool both_d4 = true;
      for (const auto& [root, members] : comps) {
        if (members.size() != 24) {
          both_d4 = false;
          break;
        }
        QMat m(static_cast<int>(members.size()), kDim);
        for (size_t i = 0; i < members.size(); ++i)
          for (int c = 0; c < kDim; ++c) m.at(static_cast<int>(i), c) = set.elements[members[i]][c];
        if (matrix_rank(std::move(m)) != 4) {
          both_d4 = false;
          break;
        }
        for (const int i : members) {
          Hist h;
          for (const int j : members) h[ip[i][j]] += 1;
          if (h != d4_hist()) {
            both_d4 = false;
            break;
          }
        }
        if (!both_d4) break;
      }
      if (both_d4) rep.type_label = "D4+D4";
    } else if (n % 2 == 0 && ncomp == n / 2 && rep.rank == n / 2) {
      bool a1 = true;
      for (const auto& sz : rep.component_sizes) a1 = a1 && sz == 2;
      if (a1 && rep.uniform_histogram) {
        Hist expect{{QSqrt3(2), 1}, {QSqrt3(-2), 1}};
        if (n > 2) expect[QSqrt3(0)] = n - 2;
        if (per_root[0] == expect) rep.type_label = "A1^" + std::to_string(n / 2);
      }
    }
  } else if (rep.length_classes == 2 && n == 48 && rep.rank == 4 && ncomp == 1) {
    int short_count = 0;
    for (int i = 0; i < n; ++i)
      if (norms[i] == nu_min) ++short_count;
    if (short_count == 24) rep.type_label = "F4";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Seed search
// ---------------------------------------------------------------------------

SeedSearchResult seed_search(const VectorSet& candidates, const VectorSet& base,
                             const AlgebraHandle& h, int target, int cap, int threads) {
  SeedSearchResult out;
  const int n = static_cast<int>(candidates.elements.size());
  out.examined = n;
  if (n == 0) return out;
  if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);

  std::vector<int> sizes(n, -1);  // -1 = cap exceeded
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      const int idx = next.fetch_add(1);
      if (idx >= n) return;
      VectorSet seed = base;
      seed.elements.push_back(candidates.elements[idx]);
      const ClosureResult res = product_closure(seed, h, cap);
      sizes[idx] = res.cap_exceeded ? -1 : static_cast<int>(res.set.elements.size());
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (int i = 0; i < n; ++i) {
    if (sizes[i] < 0)
      ++out.cap_exceeded;
    else if (sizes[i] == target)
      out.hits.push_back({candidates.elements[i], sizes[i]});
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

std::string vector_set_to_csv(const VectorSet& s) {
  std::ostringstream os;
  for (const auto& e : s.elements) {
    for (int i = 0; i < kDim; ++i) {
      if (i) os << ",";
      os << e[i].str();
    }
    os << "\n";
  }
  return os.str();
}

VectorSet vector_set_from_csv(const std::string& csv, Signature sig, NormId form) {
  std::vector<Multivector> elems;
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Multivector m(sig);
    std::istringstream ls(line);
    std::string field;
    int i = 0;
    while (std::getline(ls, field, ',')) {
      if (i >= kDim) throw std::invalid_argument("too many CSV fields");
      m[i++] = parse_scalar(field);
    }
    if (i != kDim) throw std::invalid_argument("expected 8 CSV fields per row");
    elems.push_back(std::move(m));
  }
  return make_vector_set(sig, form, std::move(elems));
}

}  // namespace clifcomp
