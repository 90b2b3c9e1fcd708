#include "linset/projline.hpp"

#include <algorithm>
#include <string>

namespace linset {

std::uint64_t point_key(const FieldCtx& F, const Vec& v) {
  const std::uint64_t Q = F.order();
  const std::size_t k = v.size();
  std::uint64_t offset = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t block = 1;
    for (std::size_t j = i + 1; j < k; ++j) block *= Q;
    if (v[i].is_zero()) {
      offset += block;
      continue;
    }
    const FElem iv = F.inv(v[i]);
    std::uint64_t key = 0;
    for (std::size_t j = i + 1; j < k; ++j) key = key * Q + F.mul(v[j], iv).v;
    return offset + key;
  }
  throw Error(ErrorKind::BadParams, "zero vector has no projective point");
}

Vec point_from_key(const FieldCtx& F, std::size_t k, std::uint64_t key) {
  const std::uint64_t Q = F.order();
  Vec v(k, F.zero());
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t block = 1;
    for (std::size_t j = i + 1; j < k; ++j) block *= Q;
    if (key >= block) {
      key -= block;
      continue;
    }
    v[i] = F.one();
    for (std::size_t j = k; j-- > i + 1;) {
      v[j] = FElem{static_cast<std::uint32_t>(key % Q)};
      key /= Q;
    }
    return v;
  }
  throw Error(ErrorKind::BadParams, "point key out of range");
}

std::uint64_t projective_point_count(const FieldCtx& F, std::size_t k) {
  std::uint64_t total = 0, block = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += block;
    block *= F.order();
  }
  return total;
}

PointPG1 PointPG1::of(const FieldCtx& F, FElem x, FElem y) {
  if (x.is_zero()) {
    if (y.is_zero()) throw Error(ErrorKind::BadParams, "zero vector has no projective point");
    return infinity(F);
  }
  return PointPG1{F.div(y, x).v};
}

std::vector<FElem> fq_row(const FieldCtx& F, const Vec& v) {
  const std::size_t n = F.n();
  std::vector<FElem> row(v.size() * n);
  for (std::size_t i = 0; i < v.size(); ++i) F.fq_coords_into(v[i], std::span<FElem>(row.data() + i * n, n));
  return row;
}

Vec vec_of_row(const FieldCtx& F, std::size_t k, const FElem* row) {
  const std::size_t n = F.n();
  Vec v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = F.from_fq_coords(std::span<const FElem>(row + i * n, n));
  return v;
}

FqSubspace FqSubspace::from_rows(const FieldCtx& F, std::size_t k, Matrix rows) {
  if (rows.cols != k * F.n()) throw Error(ErrorKind::BadParams, "row length must be k*n");
  const auto pivots = rref(F, rows);
  Matrix trimmed(pivots.size(), rows.cols);
  std::copy(rows.a.begin(), rows.a.begin() + static_cast<std::ptrdiff_t>(pivots.size() * rows.cols),
            trimmed.a.begin());
  FqSubspace U;
  U.k_ = k;
  U.rows_ = std::move(trimmed);
  return U;
}

FqSubspace FqSubspace::span(const FieldCtx& F, std::size_t k, const std::vector<Vec>& gens) {
  Matrix m(gens.size(), k * F.n());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (gens[r].size() != k) throw Error(ErrorKind::BadParams, "generator has wrong length");
    const auto row = fq_row(F, gens[r]);
    std::copy(row.begin(), row.end(), m.a.begin() + static_cast<std::ptrdiff_t>(r * m.cols));
  }
  return from_rows(F, k, std::move(m));
}

FqSubspace FqSubspace::whole(const FieldCtx& F, std::size_t k) {
  return from_rows(F, k, Matrix::identity(k * F.n()));
}

std::vector<Vec> FqSubspace::basis(const FieldCtx& F) const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rows_.rows; ++r) out.push_back(vec_of_row(F, k_, &rows_.a[r * rows_.cols]));
  return out;
}

bool FqSubspace::contains(const FieldCtx& F, const Vec& v) const {
  Matrix m(rows_.rows + 1, rows_.cols);
  std::copy(rows_.a.begin(), rows_.a.end(), m.a.begin());
  const auto row = fq_row(F, v);
  std::copy(row.begin(), row.end(), m.a.begin() + static_cast<std::ptrdiff_t>(rows_.rows * rows_.cols));
  return rank(F, std::move(m)) == rows_.rows;
}

FqSubspace sum(const FieldCtx& F, const FqSubspace& a, const FqSubspace& b) {
  Matrix m(a.dim() + b.dim(), a.rows().cols);
  std::copy(a.rows().a.begin(), a.rows().a.end(), m.a.begin());
  std::copy(b.rows().a.begin(), b.rows().a.end(), m.a.begin() + static_cast<std::ptrdiff_t>(a.rows().a.size()));
  return FqSubspace::from_rows(F, a.ambient(), std::move(m));
}

std::size_t intersection_dim(const FieldCtx& F, const FqSubspace& a, const FqSubspace& b) {
  return a.dim() + b.dim() - sum(F, a, b).dim();
}

FqSubspace scale(const FieldCtx& F, FElem lambda, const FqSubspace& U) {
  auto basis = U.basis(F);
  for (auto& v : basis) {
    for (auto& x : v) x = F.mul(lambda, x);
  }
  return FqSubspace::span(F, U.ambient(), basis);
}

FqSubspace subspace_of_poly(const FieldCtx& F, const QPoly& f) {
  std::vector<Vec> gens;
  for (FElem w : F.fq_basis()) gens.push_back({w, evaluate(F, f, w)});
  return FqSubspace::span(F, 2, gens);
}

QPoly poly_of_subspace(const FieldCtx& F, const FqSubspace& U) {
  const std::size_t n = F.n();
  if (U.ambient() != 2 || U.dim() != n) {
    throw Error(ErrorKind::WrongRank, "expected an n-dimensional subspace of F_{q^n}^2, got dimension " +
                                          std::to_string(U.dim()));
  }
  const auto basis = U.basis(F);
  // Graph form iff the first coordinates are F_q-independent.
  Matrix xs(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto c = F.fq_coords(basis[r][0]);
    for (std::size_t j = 0; j < n; ++j) xs.at(r, j) = c[j];
  }
  if (rank(F, xs) < n) throw Error(ErrorKind::NotAGraph, "subspace meets the point (0,1)");
  // Moore system: sum_i a_i x_r^{q^i} = y_r.
  Matrix moore(n, n);
  std::vector<FElem> rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) moore.at(r, i) = F.frob(basis[r][0], static_cast<std::int64_t>(i));
    rhs[r] = basis[r][1];
  }
  const auto sol = solve(F, moore, rhs);
  if (!sol) throw Error(ErrorKind::InternalConsistency, "Moore system is singular");
  return QPoly{*sol};
}

FqSubspace fqn_span(const FieldCtx& F, const Vec& z) {
  std::vector<Vec> gens;
  for (FElem w : F.fq_basis()) {
    Vec v = z;
    for (auto& x : v) x = F.mul(w, x);
    gens.push_back(std::move(v));
  }
  return FqSubspace::span(F, z.size(), gens);
}

std::size_t point_weight(const FieldCtx& F, const FqSubspace& U, const Vec& z) {
  return intersection_dim(F, U, fqn_span(F, z));
}

std::size_t point_weight(const FieldCtx& F, const FqSubspace& U, PointPG1 P) {
  return point_weight(F, U, P.vec(F));
}

bool LinearSetProfile::contains(PointPG1 P) const {
  return std::binary_search(points.begin(), points.end(), P);
}

std::uint32_t LinearSetProfile::weight(PointPG1 P) const {
  const auto it = std::lower_bound(points.begin(), points.end(), P);
  if (it == points.end() || *it != P) return 0;
  return weights[static_cast<std::size_t>(it - points.begin())];
}

bool LinearSetProfile::same_points(const LinearSetProfile& other) const { return points == other.points; }

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

// Builds the profile from per-point counts of nonzero vectors.
LinearSetProfile finish_profile(const FieldCtx& F, const std::vector<std::uint32_t>& counts, std::uint32_t rank) {
  const std::uint64_t q = F.q();
  const std::uint32_t n = F.n();
  LinearSetProfile prof;
  prof.rank = rank;
  std::uint64_t total = 0;
  std::uint32_t dmin = n + 1;
  for (std::uint64_t key = 0; key < counts.size(); ++key) {
    const std::uint32_t c = counts[key];
    if (c == 0) continue;
    std::uint32_t w = 0;
    std::uint64_t pw = 1;
    while (pw - 1 < c) {
      pw *= q;
      ++w;
    }
    if (pw - 1 != c || w > n) {
      throw Error(ErrorKind::InternalConsistency,
                  "point " + std::to_string(key) + " carries " + std::to_string(c) + " vectors, not q^w - 1");
    }
    prof.points.push_back(PointPG1{key});
    prof.weights.push_back(w);
    prof.weight_spectrum[w]++;
    total += c;
    dmin = std::min(dmin, w);
  }
  prof.size = prof.points.size();
  if (total != ipow(q, rank) - 1) {
    throw Error(ErrorKind::InternalConsistency, "weights do not partition the nonzero vectors");
  }
  prof.maxfield_d = dmin;
  prof.scattered = dmin == 1 && prof.weight_spectrum.size() == 1;
  if (n % dmin != 0) {
    throw Error(ErrorKind::InternalConsistency,
                "minimum weight " + std::to_string(dmin) + " does not divide n = " + std::to_string(n));
  }
  if (dmin < n) {
    const std::uint64_t lo = ipow(q, n - dmin) + 1;
    const std::uint64_t hi = (ipow(q, n) - 1) / (ipow(q, dmin) - 1);
    if (prof.size < lo || prof.size > hi) {
      throw Error(ErrorKind::InternalConsistency, "size " + std::to_string(prof.size) + " outside [" +
                                                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
  return prof;
}

}  // namespace

LinearSetProfile profile(const FieldCtx& F, const FqSubspace& U) {
  if (U.ambient() != 2 || U.dim() != F.n()) {
    throw Error(ErrorKind::WrongRank, "profile needs an n-dimensional subspace of F_{q^n}^2");
  }
  std::vector<std::uint32_t> counts(F.order() + 1, 0);
  for_each_nonzero(F, U.basis(F), [&](const Vec& v) { counts[PointPG1::of(F, v[0], v[1]).key]++; });
  return finish_profile(F, counts, static_cast<std::uint32_t>(U.dim()));
}

LinearSetProfile profile(const FieldCtx& F, const QPoly& f) {
  std::vector<std::uint32_t> counts(F.order() + 1, 0);
  for (std::uint64_t x = 1; x < F.order(); ++x) {
    const FElem xe{static_cast<std::uint32_t>(x)};
    counts[F.div(evaluate(F, f, xe), xe).v]++;
  }
  return finish_profile(F, counts, F.n());
}

FqSubspace perp(const FieldCtx& F, const FqSubspace& U) {
  if (U.ambient() != 2) throw Error(ErrorKind::BadParams, "perp is defined on F_{q^n}^2");
  const std::size_t n = F.n();
  const auto basis = U.basis(F);
  // G[r][c] = Tr(u_x w_y - u_y w_x) for w the c-th standard F_q-basis vector.
  Matrix G(basis.size(), 2 * n);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      const FElem w = F.fq_basis()[j];
      G.at(r, j) = F.trace(F.neg(F.mul(basis[r][1], w)));
      G.at(r, n + j) = F.trace(F.mul(basis[r][0], w));
    }
  }
  // Trace values lie in F_q; the nullspace is expressed in F_q coordinates.
  return FqSubspace::from_rows(F, 2, nullspace(F, G));
}

}  // namespace linset
