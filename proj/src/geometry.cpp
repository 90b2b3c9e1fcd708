#include "linset/geometry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "linset/classify.hpp"

namespace linset {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t k, std::uint64_t budget, const std::string& what) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (total > budget / base) check_budget(~0ull, budget, what);
    total *= base;
  }
  check_budget(total, budget, what);
  return total;
}

std::vector<std::uint32_t> subspace_key(const FqSubspace& V) {
  std::vector<std::uint32_t> key;
  key.reserve(V.rows().a.size());
  for (auto x : V.rows().a) key.push_back(x.v);
  return key;
}

std::vector<Vec> standard_basis(const FieldCtx& F, std::size_t k) {
  std::vector<Vec> out(k, Vec(k, F.zero()));
  for (std::size_t i = 0; i < k; ++i) out[i][i] = F.one();
  return out;
}

}  // namespace

std::vector<PointPG1> point_set(const FieldCtx& F, const FqSubspace& U) {
  std::vector<PointPG1> pts;
  for_each_nonzero(F, U.basis(F), [&](const Vec& v) { pts.push_back(PointPG1::of(F, v[0], v[1])); });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

ProjectionResult project_subgeometry(const FieldCtx& F, const ProjectionConfig& cfg, std::uint64_t budget) {
  const std::size_t n = F.n();
  if (cfg.center.size() + 2 != n || cfg.axis.size() != 2) {
    throw Error(ErrorKind::BadParams, "center needs n-2 vectors and axis 2 vectors");
  }
  Matrix M(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Vec& v = r + 2 < n ? cfg.center[r] : cfg.axis[r + 2 - n];
    if (v.size() != n) throw Error(ErrorKind::BadParams, "config vectors must have length n");
    for (std::size_t c = 0; c < n; ++c) M.at(r, c) = v[c];
  }
  const auto coeffs = inverse(F, transpose(M));
  if (!coeffs) throw Error(ErrorKind::CenterMeetsAxis, "center and axis do not span the whole space");
  checked_power(F.q(), n, budget, "subgeometry projection");

  // Axis coordinates of the projection of a vector x.
  auto project = [&](const Vec& x) {
    Vec out(2, F.zero());
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t c = 0; c < n; ++c) out[i] = F.add(out[i], F.mul(coeffs->at(n - 2 + i, c), x[c]));
    }
    return out;
  };

  ProjectionResult res;
  std::vector<Vec> images;
  for (const auto& e : standard_basis(F, n)) images.push_back(project(e));
  res.subspace = FqSubspace::span(F, 2, images);
  if (res.subspace.dim() < n) throw Error(ErrorKind::CenterMeetsSubgeometry, "center contains a rational point");

  for_each_nonzero(F, standard_basis(F, n), [&](const Vec& x) {
    const Vec y = project(x);
    res.points.push_back(PointPG1::of(F, y[0], y[1]));
  });
  std::sort(res.points.begin(), res.points.end());
  res.points.erase(std::unique(res.points.begin(), res.points.end()), res.points.end());
  if (res.points != point_set(F, res.subspace)) {
    throw Error(ErrorKind::InternalConsistency, "projected points differ from the linear set of the image");
  }
  res.spans_axis = res.points.size() >= 2;
  return res;
}

ProjectionConfig realize_as_projection(const FieldCtx& F, const QPoly& f) {
  const auto prof = profile(F, f);
  if (prof.maxfield_d != 1) {
    throw Error(ErrorKind::MaxFieldTooLarge, "realization needs maximum field of linearity F_q");
  }
  const std::size_t n = F.n();
  Matrix phi(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    phi.at(0, j) = F.fq_basis()[j];
    phi.at(1, j) = evaluate(F, f, F.fq_basis()[j]);
  }
  ProjectionConfig cfg;
  const Matrix ker = nullspace(F, phi);
  for (std::size_t r = 0; r < ker.rows; ++r) {
    cfg.center.emplace_back(ker.a.begin() + static_cast<std::ptrdiff_t>(r * n),
                            ker.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
  }
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<FElem> rhs(2, F.zero());
    rhs[i] = F.one();
    const auto sol = solve(F, phi, rhs);
    if (!sol) throw Error(ErrorKind::InternalConsistency, "graph map has rank below 2");
    cfg.axis.push_back(*sol);
  }
  return cfg;
}

BlockingSet redei_blocking_set(const FieldCtx& F, const FqSubspace& U, const Vec& w) {
  if (U.ambient() != 2 || U.dim() != F.n()) throw Error(ErrorKind::WrongRank, "U must be n-dimensional in F_{q^n}^2");
  if (w.size() != 3) throw Error(ErrorKind::BadParams, "w must have three coordinates");
  if (w[2].is_zero()) throw Error(ErrorKind::BadAffinePoint, "w lies on the line z = 0");
  std::vector<Vec> gens;
  for (const auto& u : U.basis(F)) gens.push_back({u[0], u[1], F.zero()});
  gens.push_back(w);
  BlockingSet B;
  for_each_nonzero(F, gens, [&](const Vec& v) { B.points.push_back(point_key(F, v)); });
  std::sort(B.points.begin(), B.points.end());
  B.points.erase(std::unique(B.points.begin(), B.points.end()), B.points.end());
  B.line_part = point_set(F, U).size();
  return B;
}

bool on_line(const FieldCtx& F, std::uint64_t line, const Vec& point) {
  const Vec l = point_from_key(F, 3, line);
  FElem s = F.zero();
  for (std::size_t i = 0; i < 3; ++i) s = F.add(s, F.mul(l[i], point[i]));
  return s.is_zero();
}

BlockingReport blocking_checks(const FieldCtx& F, const std::vector<std::uint64_t>& points, std::uint64_t budget) {
  const std::uint64_t lines = projective_point_count(F, 3);
  check_budget(lines + points.size() * (F.order() + 1), budget, "line sweep");
  std::vector<std::uint32_t> hits(lines, 0);
  for (std::uint64_t key : points) {
    const Vec P = point_from_key(F, 3, key);
    Matrix row(1, 3);
    for (std::size_t i = 0; i < 3; ++i) row.at(0, i) = P[i];
    const Matrix dual = nullspace(F, row);
    const Vec l1(dual.a.begin(), dual.a.begin() + 3);
    const Vec l2(dual.a.begin() + 3, dual.a.begin() + 6);
    hits[point_key(F, l1)]++;
    for (std::uint64_t s = 0; s < F.order(); ++s) {
      const FElem se{static_cast<std::uint32_t>(s)};
      Vec l(3);
      for (std::size_t i = 0; i < 3; ++i) l[i] = F.add(F.mul(se, l1[i]), l2[i]);
      hits[point_key(F, l)]++;
    }
  }
  BlockingReport rep;
  rep.size = points.size();
  rep.N = rep.size >= F.order() ? rep.size - F.order() : 0;
  rep.is_blocking = std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h > 0; });
  for (std::uint64_t l = 0; l < lines; ++l) {
    if (hits[l] == rep.N) rep.redei_lines.push_back(l);
  }
  return rep;
}

void for_each_subspace(const FieldCtx& F, std::size_t dim, const std::function<void(const FqSubspace&)>& fn) {
  const std::size_t cols = 2 * F.n();
  const auto& el = F.fq_elements();
  const std::uint64_t q = el.size();
  for (std::uint64_t mask = 0; mask < (1ull << cols); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != dim) continue;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < cols; ++c) {
      if (mask >> c & 1) piv.push_back(c);
    }
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = piv[r] + 1; c < cols; ++c) {
        if (!(mask >> c & 1)) free.emplace_back(r, c);
      }
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= q;
    Matrix m(dim, cols);
    for (std::size_t r = 0; r < dim; ++r) m.at(r, piv[r]) = F.one();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t x = idx;
      for (const auto& [r, c] : free) {
        m.at(r, c) = el[x % q];
        x /= q;
      }
      fn(FqSubspace::from_rows(F, 2, m));
    }
  }
}

std::uint64_t transversal_spaces(const FieldCtx& F, const FqSubspace& U, bool full_sweep, std::uint64_t budget) {
  if (U.ambient() != 2 || U.dim() != F.n()) throw Error(ErrorKind::WrongRank, "U must be n-dimensional in F_{q^n}^2");
  const std::size_t n = F.n();
  const auto target = point_set(F, U);
  std::map<std::vector<std::uint32_t>, bool> found;

  if (full_sweep) {
    checked_power(F.q(), n * n + 2 * n, budget, "subspace sweep");
    for_each_subspace(F, n, [&](const FqSubspace& V) {
      if (point_set(F, V) == target) found.emplace(subspace_key(V), false);
    });
  } else {
    const std::uint64_t total = checked_power(F.order(), n, budget, "graph sweep");
    DirectionMatcher matcher(F, target);
    QPoly g = qpoly_zero(F);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < n; ++i) {
        g[i] = FElem{static_cast<std::uint32_t>(x % F.order())};
        x /= F.order();
      }
      if (matcher.matches(g)) found.emplace(subspace_key(subspace_of_poly(F, g)), false);
    }
  }

  // Classes under V ~ lambda V; lambda and c lambda (c in F_q^*) give the same V.
  const std::uint64_t scalars = F.group_order() / (F.q() - 1);
  std::uint64_t orbits = 0;
  for (auto& [key, seen] : found) {
    if (seen) continue;
    ++orbits;
    Matrix rows(n, 2 * n);
    for (std::size_t i = 0; i < key.size(); ++i) rows.a[i] = FElem{key[i]};
    const FqSubspace V = FqSubspace::from_rows(F, 2, rows);
    for (std::uint64_t j = 0; j < scalars; ++j) {
      const auto it = found.find(subspace_key(scale(F, F.gen_pow(j), V)));
      if (it == found.end()) throw Error(ErrorKind::InternalConsistency, "scaled transversal space missing");
      it->second = true;
    }
  }
  return orbits;
}

}  // namespace linset
