#pragma once

// F_q-subspaces of F_{q^n}^k, projective points, and linear sets on PG(1,q^n).

#include <cstdint>
#include <map>
#include <vector>

#include "linset/finitefield.hpp"
#include "linset/linalg.hpp"
#include "linset/qpoly.hpp"

namespace linset {

// A vector of F_{q^n}^k.
using Vec = std::vector<FElem>;

// Projective points of PG(k-1, q^n) are keyed by their normalized
// representative (first nonzero coordinate 1). With the leading 1 in slot i,
// key = sum_{j<i} Q^{k-1-j} + (remaining coordinates read base Q).
// On the line this gives key m for (1, m) and key Q for (0, 1).
std::uint64_t point_key(const FieldCtx& F, const Vec& v);
Vec point_from_key(const FieldCtx& F, std::size_t k, std::uint64_t key);
std::uint64_t projective_point_count(const FieldCtx& F, std::size_t k);

struct PointPG1 {
  std::uint64_t key = 0;

  static PointPG1 of(const FieldCtx& F, FElem x, FElem y);
  static PointPG1 slope(FElem m) { return PointPG1{m.v}; }
  static PointPG1 infinity(const FieldCtx& F) { return PointPG1{F.order()}; }

  bool is_infinity(const FieldCtx& F) const { return key == F.order(); }
  // A representative (x, y) of the point.
  Vec vec(const FieldCtx& F) const { return point_from_key(F, 2, key); }

  friend bool operator==(PointPG1, PointPG1) = default;
  friend auto operator<=>(PointPG1, PointPG1) = default;
};

class FqSubspace {
 public:
  FqSubspace() = default;

  static FqSubspace span(const FieldCtx& F, std::size_t k, const std::vector<Vec>& gens);
  // Subspace whose F_q-coordinate rows (k*n columns each) are the given rows.
  static FqSubspace from_rows(const FieldCtx& F, std::size_t k, Matrix rows);
  static FqSubspace whole(const FieldCtx& F, std::size_t k);

  std::size_t dim() const { return rows_.rows; }
  std::size_t ambient() const { return k_; }
  // Canonical reduced echelon rows over F_q.
  const Matrix& rows() const { return rows_; }
  std::vector<Vec> basis(const FieldCtx& F) const;
  bool contains(const FieldCtx& F, const Vec& v) const;

  friend bool operator==(const FqSubspace&, const FqSubspace&) = default;

 private:
  std::size_t k_ = 0;
  Matrix rows_;
};

// F_q-coordinate row of a vector: coords(v_0) ++ coords(v_1) ++ ...
std::vector<FElem> fq_row(const FieldCtx& F, const Vec& v);
Vec vec_of_row(const FieldCtx& F, std::size_t k, const FElem* row);

FqSubspace sum(const FieldCtx& F, const FqSubspace& a, const FqSubspace& b);
std::size_t intersection_dim(const FieldCtx& F, const FqSubspace& a, const FqSubspace& b);
// lambda * U
FqSubspace scale(const FieldCtx& F, FElem lambda, const FqSubspace& U);

// Calls fn(v) for every nonzero F_q-combination of the basis vectors.
template <class Fn>
void for_each_nonzero(const FieldCtx& F, const std::vector<Vec>& basis, Fn&& fn) {
  const auto& el = F.fq_elements();
  const std::size_t d = basis.size();
  if (d == 0) return;
  const std::size_t k = basis[0].size();
  const std::size_t q = el.size();
  // Step deltas: moving digit i from element t to t+1 (cyclically).
  std::vector<Vec> step(d * q, Vec(k));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t t = 0; t < q; ++t) {
      const FElem delta = F.sub(el[(t + 1) % q], el[t]);
      for (std::size_t c = 0; c < k; ++c) step[i * q + t][c] = F.mul(delta, basis[i][c]);
    }
  }
  std::vector<std::size_t> digit(d, 0);
  Vec cur(k, F.zero());
  while (true) {
    std::size_t i = 0;
    while (i < d) {
      const auto& s = step[i * q + digit[i]];
      for (std::size_t c = 0; c < k; ++c) cur[c] = F.add(cur[c], s[c]);
      digit[i] = (digit[i] + 1) % q;
      if (digit[i] != 0) break;
      ++i;
    }
    if (i == d) return;
    fn(static_cast<const Vec&>(cur));
  }
}

FqSubspace subspace_of_poly(const FieldCtx& F, const QPoly& f);
// Throws WrongRank unless dim U = n, NotAGraph if U meets <(0,1)>.
QPoly poly_of_subspace(const FieldCtx& F, const FqSubspace& U);

// The n-dimensional F_q-subspace <z>_{F_{q^n}}.
FqSubspace fqn_span(const FieldCtx& F, const Vec& z);
std::size_t point_weight(const FieldCtx& F, const FqSubspace& U, const Vec& z);
std::size_t point_weight(const FieldCtx& F, const FqSubspace& U, PointPG1 P);

struct LinearSetProfile {
  std::vector<PointPG1> points;  // sorted by key
  std::vector<std::uint32_t> weights;
  std::uint64_t size = 0;
  std::uint32_t rank = 0;
  std::uint32_t maxfield_d = 0;
  bool scattered = false;
  std::map<std::uint32_t, std::uint64_t> weight_spectrum;

  bool contains(PointPG1 P) const;
  std::uint32_t weight(PointPG1 P) const;  // 0 if P is not in the set
  bool same_points(const LinearSetProfile& other) const;
};

// Linear set of a rank-n subspace of F_{q^n}^2.
LinearSetProfile profile(const FieldCtx& F, const FqSubspace& U);
// Same result computed from the directions f(x)/x.
LinearSetProfile profile(const FieldCtx& F, const QPoly& f);

// Complement under the alternating form Tr((x,y),(u,v)) = Tr(xv - yu).
FqSubspace perp(const FieldCtx& F, const FqSubspace& U);

}  // namespace linset
