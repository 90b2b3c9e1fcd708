#pragma once

// Brute-force reference implementations used to cross-check the library.
// They avoid the library's tables, pruning and linear algebra on purpose.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "linset/finitefield.hpp"
#include "linset/projline.hpp"
#include "linset/qpoly.hpp"

namespace oracle {

using linset::FElem;
using linset::FieldCtx;
using linset::QPoly;

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  a = trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = 1;
  while (lead_inv * m.back() % p != 1) ++lead_inv;
  while (a.size() > dm) {
    const std::uint32_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    a = trim(a);
  }
  return a;
}

inline Poly poly_from_code(std::uint64_t code, std::uint32_t p) {
  Poly a;
  while (code) {
    a.push_back(static_cast<std::uint32_t>(code % p));
    code /= p;
  }
  return a;
}

// Smallest-encoding monic irreducible of degree d by trial division.
inline Poly smallest_irreducible(std::uint32_t p, std::uint32_t d) {
  std::uint64_t pd = 1;
  for (std::uint32_t i = 0; i < d; ++i) pd *= p;
  for (std::uint64_t low = 0; low < pd; ++low) {
    Poly m = poly_from_code(low, p);
    m.resize(d + 1, 0);
    m[d] = 1;
    bool irreducible = true;
    for (std::uint64_t code = p; irreducible && code < pd; ++code) {
      const Poly div = poly_from_code(code, p);
      if (div.size() - 1 > d / 2 || div.back() != 1) continue;
      if (poly_mod(m, div, p).empty()) irreducible = false;
    }
    if (irreducible) return m;
  }
  return {};
}

// Schoolbook product of two encoded elements modulo the field's modulus.
inline FElem slow_mul(const FieldCtx& F, FElem a, FElem b) {
  const std::uint32_t p = F.p();
  const Poly x = poly_from_code(a.v, p), y = poly_from_code(b.v, p);
  Poly prod(x.size() + y.size() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  const Poly r = poly_mod(prod, F.spec().modulus, p);
  std::uint64_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p + r[i];
  return FElem{static_cast<std::uint32_t>(code)};
}

inline FElem slow_add(const FieldCtx& F, FElem a, FElem b) {
  std::uint64_t code = 0, w = 1;
  std::uint32_t x = a.v, y = b.v;
  while (x || y) {
    code += w * ((x % F.p() + y % F.p()) % F.p());
    x /= F.p();
    y /= F.p();
    w *= F.p();
  }
  return FElem{static_cast<std::uint32_t>(code)};
}

inline FElem slow_pow(const FieldCtx& F, FElem a, std::uint64_t k) {
  FElem r = F.one();
  for (std::uint64_t i = 0; i < k; ++i) r = slow_mul(F, r, a);
  return r;
}

// f(x) evaluated as sum a_i * x^(q^i) with repeated schoolbook multiplication.
inline FElem slow_eval(const FieldCtx& F, const QPoly& f, FElem x) {
  FElem r = F.zero(), xp = x;
  for (std::size_t i = 0; i < f.size(); ++i) {
    r = slow_add(F, r, slow_mul(F, f[i], xp));
    xp = slow_pow(F, xp, F.q());
  }
  return r;
}

inline FElem elem(std::uint64_t v) { return FElem{static_cast<std::uint32_t>(v)}; }

// Multiset {f(x)/x : x != 0} as slope -> count.
inline std::map<std::uint32_t, std::uint64_t> directions(const FieldCtx& F, const QPoly& f) {
  std::map<std::uint32_t, std::uint64_t> out;
  for (std::uint64_t x = 1; x < F.order(); ++x) out[F.div(linset::evaluate(F, f, elem(x)), elem(x)).v]++;
  return out;
}

inline std::set<std::uint32_t> direction_set(const FieldCtx& F, const QPoly& f) {
  std::set<std::uint32_t> s;
  for (auto [m, c] : directions(F, f)) s.insert(m);
  return s;
}

inline std::uint32_t log_q(const FieldCtx& F, std::uint64_t count) {
  std::uint32_t k = 0;
  while (count > 1) {
    count /= F.q();
    ++k;
  }
  return k;
}

inline std::uint32_t kernel_dim(const FieldCtx& F, const QPoly& f) {
  std::uint64_t zeros = 0;
  for (std::uint64_t x = 0; x < F.order(); ++x) zeros += linset::evaluate(F, f, elem(x)).is_zero();
  return log_q(F, zeros);
}

// Rank distribution of {a x + b f(x)} by counting kernels.
inline std::vector<std::uint64_t> rank_distribution(const FieldCtx& F, const QPoly& f) {
  std::vector<std::uint64_t> dist(F.n() + 1, 0);
  std::vector<FElem> fx(F.order());
  for (std::uint64_t x = 0; x < F.order(); ++x) fx[x] = linset::evaluate(F, f, elem(x));
  for (std::uint64_t a = 0; a < F.order(); ++a) {
    for (std::uint64_t b = 0; b < F.order(); ++b) {
      std::uint64_t zeros = 0;
      for (std::uint64_t x = 0; x < F.order(); ++x) {
        zeros += F.add(F.mul(elem(a), elem(x)), F.mul(elem(b), fx[x])).is_zero();
      }
      dist[F.n() - log_q(F, zeros)]++;
    }
  }
  return dist;
}

// All g with the same direction set as f, by scanning every coefficient vector.
inline std::vector<QPoly> equal_polys(const FieldCtx& F, const QPoly& f) {
  const auto target = direction_set(F, f);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < F.n(); ++i) total *= F.order();
  std::vector<QPoly> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    QPoly g = linset::qpoly_zero(F);
    std::uint64_t r = idx;
    for (std::uint32_t i = 0; i < F.n(); ++i) {
      g[i] = elem(r % F.order());
      r /= F.order();
    }
    if (direction_set(F, g) == target) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline FElem trace(const FieldCtx& F, FElem x) {
  FElem s = F.zero(), t = x;
  for (std::uint32_t i = 0; i < F.n(); ++i) {
    s = F.add(s, t);
    t = F.pow(t, F.q());
  }
  return s;
}

// Every pair of basis vectors of U and V pairs to zero under Tr(x v - y u).
inline bool orthogonal(const FieldCtx& F, const linset::FqSubspace& U, const linset::FqSubspace& V) {
  for (const auto& u : U.basis(F)) {
    for (const auto& v : V.basis(F)) {
      if (!trace(F, F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0]))).is_zero()) return false;
    }
  }
  return true;
}

inline QPoly random_poly(const FieldCtx& F, std::mt19937_64& rng) {
  QPoly f = linset::qpoly_zero(F);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = elem(rng() % F.order());
  return f;
}

inline FElem random_nonzero(const FieldCtx& F, std::mt19937_64& rng) { return elem(1 + rng() % (F.order() - 1)); }

inline QPoly poly_at(const FieldCtx& F, std::uint64_t idx) {
  QPoly g = linset::qpoly_zero(F);
  for (std::uint32_t i = 0; i < F.n(); ++i) {
    g[i] = elem(idx % F.order());
    idx /= F.order();
  }
  return g;
}

inline std::uint64_t poly_count(const FieldCtx& F) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < F.n(); ++i) total *= F.order();
  return total;
}

}  // namespace oracle
