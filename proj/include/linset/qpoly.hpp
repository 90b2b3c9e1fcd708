#pragma once

// Linearized polynomials f(x) = sum_i a_i x^{q^i} over F_{q^n}, stored as the
// length-n coefficient vector (a_0, ..., a_{n-1}).

#include <string>
#include <string_view>
#include <vector>

#include "linset/finitefield.hpp"
#include "linset/linalg.hpp"

namespace linset {

struct QPoly {
  std::vector<FElem> c;

  std::size_t size() const { return c.size(); }
  FElem operator[](std::size_t i) const { return c[i]; }
  FElem& operator[](std::size_t i) { return c[i]; }
  bool is_zero() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;
  friend auto operator<=>(const QPoly&, const QPoly&) = default;
};

struct QPolyHash {
  std::size_t operator()(const QPoly& f) const noexcept;
};

QPoly qpoly_zero(const FieldCtx& F);
QPoly qpoly_identity(const FieldCtx& F);
// a * x^{q^i}
QPoly qpoly_monomial(const FieldCtx& F, std::uint32_t i, FElem a = FElem{1});
// Tr_{q^n/q}
QPoly trace_poly(const FieldCtx& F);

FElem evaluate(const FieldCtx& F, const QPoly& f, FElem x);

QPoly add(const FieldCtx& F, const QPoly& f, const QPoly& g);
QPoly sub(const FieldCtx& F, const QPoly& f, const QPoly& g);
QPoly scale(const FieldCtx& F, FElem a, const QPoly& f);

QPoly adjoint(const FieldCtx& F, const QPoly& f);
// (f o g)(x) = f(g(x)) reduced modulo x^{q^n} - x.
QPoly compose(const FieldCtx& F, const QPoly& f, const QPoly& g);
// Coefficients raised to p^k (the polynomial f^sigma with sigma = p^k).
QPoly twist(const FieldCtx& F, const QPoly& f, std::int64_t k);
// x -> f(lambda x) / lambda: coefficient i becomes a_i lambda^{q^i - 1}.
QPoly scale_conjugate(const FieldCtx& F, const QPoly& f, FElem lambda);

// n x n matrix over F_q of f in the basis fq_basis(): column j holds the
// coordinates of f(basis_j).
Matrix fq_matrix(const FieldCtx& F, const QPoly& f);
std::size_t kernel_dimension(const FieldCtx& F, const QPoly& f);

// Row i, column j holds a_{j-i mod n}^{q^i}.
Matrix dickson_matrix(const FieldCtx& F, const QPoly& f);
std::size_t dickson_rank(const FieldCtx& F, const QPoly& f);

// Comma-separated encodings "a0,a1,...".
std::string format_qpoly(const QPoly& f);
QPoly parse_qpoly(const FieldCtx& F, std::string_view text);

}  // namespace linset
