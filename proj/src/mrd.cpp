#include "linset/mrd.hpp"

#include <numeric>
#include <string>

namespace linset {

namespace {

std::uint64_t checked_size(const FieldCtx& F, std::size_t dim, std::uint64_t budget, const std::string& what) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > budget / F.q()) check_budget(~0ull, budget, what);
    total *= F.q();
  }
  check_budget(total, budget, what);
  return total;
}

Vec flatten(const Matrix& m) { return m.a; }

Matrix unflatten(const Vec& v, std::uint32_t n) {
  Matrix m(n, n);
  m.a = v;
  return m;
}

}  // namespace

RankCode code_from_polys(const FieldCtx& F, const std::vector<QPoly>& gens) {
  std::vector<Vec> rows;
  for (const auto& g : gens) rows.push_back(g.c);
  RankCode code;
  code.space = FqSubspace::span(F, F.n(), rows);
  for (auto& v : code.space.basis(F)) code.basis.push_back(QPoly{std::move(v)});
  return code;
}

RankCode code_from_poly(const FieldCtx& F, const QPoly& f) {
  bool scalar = true;
  for (std::size_t i = 1; i < f.size(); ++i) scalar = scalar && f[i].is_zero();
  if (scalar) throw Error(ErrorKind::DegeneratePoly, "f is a scalar multiple of x; the code collapses");
  std::vector<QPoly> gens;
  for (FElem w : F.fq_basis()) gens.push_back(qpoly_monomial(F, 0, w));
  for (FElem w : F.fq_basis()) gens.push_back(scale(F, w, f));
  return code_from_polys(F, gens);
}

bool contains(const FieldCtx& F, const RankCode& code, const QPoly& h) { return code.space.contains(F, h.c); }

std::size_t poly_rank(const FieldCtx& F, const QPoly& h) { return F.n() - kernel_dimension(F, h); }

std::vector<std::uint64_t> rank_distribution(const FieldCtx& F, const RankCode& code, std::uint64_t budget) {
  checked_size(F, code.dim(), budget, "rank distribution");
  std::vector<std::uint64_t> dist(F.n() + 1, 0);
  dist[0] = 1;
  std::vector<Vec> basis;
  for (const auto& b : code.basis) basis.push_back(b.c);
  for_each_nonzero(F, basis, [&](const Vec& v) { dist[poly_rank(F, QPoly{v})]++; });
  return dist;
}

std::vector<std::uint64_t> rank_distribution_pairs(const FieldCtx& F, const QPoly& f, std::uint64_t budget) {
  const std::uint64_t Q = F.order();
  const std::uint32_t n = F.n();
  checked_size(F, 2ull * n, budget, "rank distribution");
  std::vector<FElem> fw(n);
  for (std::uint32_t j = 0; j < n; ++j) fw[j] = evaluate(F, f, F.fq_basis()[j]);
  std::vector<std::uint64_t> dist(n + 1, 0);
  Matrix m(n, n);
  std::vector<FElem> coords(n);
  for (std::uint64_t a = 0; a < Q; ++a) {
    for (std::uint64_t b = 0; b < Q; ++b) {
      for (std::uint32_t j = 0; j < n; ++j) {
        const FElem val = F.add(F.mul(FElem{static_cast<std::uint32_t>(a)}, F.fq_basis()[j]),
                                F.mul(FElem{static_cast<std::uint32_t>(b)}, fw[j]));
        F.fq_coords_into(val, coords);
        for (std::uint32_t i = 0; i < n; ++i) m.at(i, j) = coords[i];
      }
      dist[rank(F, m)]++;
    }
  }
  return dist;
}

bool is_mrd(const FieldCtx& F, std::size_t dim, const std::vector<std::uint64_t>& dist) {
  const std::uint32_t n = F.n();
  if (dim != 2ull * n) return false;
  for (std::uint32_t r = 1; r + 2 <= n; ++r) {
    if (dist[r] != 0) return false;
  }
  return true;
}

bool is_mrd(const FieldCtx& F, const RankCode& code, std::uint64_t budget) {
  return is_mrd(F, code.dim(), rank_distribution(F, code, budget));
}

QPoly family(const FieldCtx& F, std::string_view name, std::uint32_t s, FElem delta) {
  const std::uint32_t n = F.n();
  auto need_coprime = [&] {
    if (s == 0 || s >= n || std::gcd(s, n) != 1) {
      throw Error(ErrorKind::BadParams, "s must satisfy 0 < s < n and gcd(s, n) = 1");
    }
  };
  if (name == "gabidulin") return qpoly_monomial(F, 1);
  if (name == "gen_gabidulin") {
    need_coprime();
    return qpoly_monomial(F, s);
  }
  if (name == "sheekey" || name == "ltz") {
    if (name == "sheekey") s = 1;
    need_coprime();
    if (delta.is_zero()) throw Error(ErrorKind::BadParams, "delta must be nonzero");
    if (name == "ltz" && F.norm(delta) == F.one()) throw Error(ErrorKind::BadParams, "ltz needs N(delta) != 1");
    QPoly f = qpoly_monomial(F, s, delta);
    f[n - s] = F.add(f[n - s], F.one());
    return f;
  }
  throw Error(ErrorKind::BadParams, "unknown family '" + std::string(name) + "'");
}

MatrixCode matrix_code(const FieldCtx& F, const std::vector<Matrix>& gens) {
  MatrixCode c;
  c.n = gens.empty() ? F.n() : static_cast<std::uint32_t>(gens[0].rows);
  const std::size_t len = static_cast<std::size_t>(c.n) * c.n;
  Matrix rows(gens.size(), len);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t j = 0; j < len; ++j) rows.at(r, j) = gens[r].a[j];
  }
  c.pivots = rref(F, rows);
  c.reduced = Matrix(c.pivots.size(), len);
  for (std::size_t r = 0; r < c.pivots.size(); ++r) {
    for (std::size_t j = 0; j < len; ++j) c.reduced.at(r, j) = rows.at(r, j);
    c.basis.push_back(unflatten(Vec(rows.a.begin() + static_cast<std::ptrdiff_t>(r * len),
                                    rows.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * len)),
                                c.n));
  }
  return c;
}

MatrixCode matrix_code(const FieldCtx& F, const RankCode& code) {
  std::vector<Matrix> gens;
  for (const auto& b : code.basis) gens.push_back(fq_matrix(F, b));
  return matrix_code(F, gens);
}

MatrixCode transpose_code(const FieldCtx& F, const MatrixCode& c) {
  std::vector<Matrix> gens;
  for (const auto& b : c.basis) gens.push_back(transpose(b));
  return matrix_code(F, gens);
}

bool contains(const FieldCtx& F, const MatrixCode& c, const Matrix& m) {
  Vec v = flatten(m);
  for (std::size_t r = 0; r < c.pivots.size(); ++r) {
    const FElem factor = v[c.pivots[r]];
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(factor, c.reduced.at(r, j)));
  }
  for (auto x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<std::uint64_t> rank_distribution(const FieldCtx& F, const MatrixCode& c, std::uint64_t budget) {
  checked_size(F, c.basis.size(), budget, "rank distribution");
  std::vector<std::uint64_t> dist(c.n + 1, 0);
  dist[0] = 1;
  std::vector<Vec> basis;
  for (const auto& b : c.basis) basis.push_back(flatten(b));
  for_each_nonzero(F, basis, [&](const Vec& v) { dist[rank(F, unflatten(v, c.n))]++; });
  return dist;
}

std::vector<Matrix> general_linear_group(const FieldCtx& F, std::uint32_t n, std::uint64_t budget) {
  const std::uint64_t total = checked_size(F, static_cast<std::size_t>(n) * n, budget, "GL(n,q) enumeration");
  const auto& el = F.fq_elements();
  const std::uint64_t q = el.size();
  std::vector<Matrix> out;
  Matrix m(n, n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (auto& x : m.a) {
      x = el[r % q];
      r /= q;
    }
    if (rank(F, m) == n) out.push_back(m);
  }
  return out;
}

Matrix apply(const FieldCtx& F, const CodeWitness& w, const Matrix& m) {
  Matrix t = w.transpose ? transpose(m) : m;
  for (auto& x : t.a) x = F.frob_p(x, w.k);
  return multiply(F, multiply(F, w.A, t), w.B);
}

std::optional<CodeWitness> code_equivalent_smallscale(const FieldCtx& F, const MatrixCode& c1, const MatrixCode& c2,
                                                      bool allow_transpose, std::uint64_t budget) {
  const std::uint32_t n = c1.n;
  if (c2.n != n || c1.basis.size() != c2.basis.size()) return std::nullopt;
  if (rank_distribution(F, c1, budget) != rank_distribution(F, c2, budget)) return std::nullopt;

  // Full-rank members: one fixed in c1, all of them in c2.
  std::optional<Matrix> m0;
  std::vector<Matrix> targets;
  {
    std::vector<Vec> b1, b2;
    for (const auto& b : c1.basis) b1.push_back(flatten(b));
    for (const auto& b : c2.basis) b2.push_back(flatten(b));
    for_each_nonzero(F, b1, [&](const Vec& v) {
      if (!m0 && rank(F, unflatten(v, n)) == n) m0 = unflatten(v, n);
    });
    for_each_nonzero(F, b2, [&](const Vec& v) {
      if (rank(F, unflatten(v, n)) == n) targets.push_back(unflatten(v, n));
    });
  }
  if (!m0) throw Error(ErrorKind::BadParams, "code has no invertible member to anchor the search");

  const auto gl = general_linear_group(F, n, budget);
  const std::uint64_t variants = static_cast<std::uint64_t>(F.e()) * (allow_transpose ? 2 : 1);
  check_budget(static_cast<std::uint64_t>(gl.size()) * targets.size() * variants, budget, "code equivalence sweep");

  for (std::uint32_t k = 0; k < F.e(); ++k) {
    for (int t = 0; t < (allow_transpose ? 2 : 1); ++t) {
      CodeWitness w;
      w.k = k;
      w.transpose = t == 1;
      w.B = Matrix::identity(n);
      for (const auto& A : gl) {
        w.A = A;
        const auto inv = inverse(F, apply(F, w, *m0));
        for (const auto& N : targets) {
          CodeWitness cand = w;
          cand.B = multiply(F, *inv, N);
          bool ok = true;
          for (const auto& b : c1.basis) {
            if (!contains(F, c2, apply(F, cand, b))) {
              ok = false;
              break;
            }
          }
          if (ok) return cand;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace linset
