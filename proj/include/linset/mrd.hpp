#pragma once

// Rank-metric codes C_f = {a x + b f(x)} and their matrix realizations.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "linset/finitefield.hpp"
#include "linset/linalg.hpp"
#include "linset/projline.hpp"
#include "linset/qpoly.hpp"
#include "linset/runtime.hpp"

namespace linset {

struct RankCode {
  std::vector<QPoly> basis;  // F_q-basis
  FqSubspace space;          // coefficient vectors as a subspace of F_{q^n}^n
  std::size_t dim() const { return basis.size(); }
};

// F_q-span of arbitrary q-polynomials (reduced to a basis).
RankCode code_from_polys(const FieldCtx& F, const std::vector<QPoly>& gens);
// Span of w x and w f(x) over the basis w of F_{q^n}. Throws DegeneratePoly if
// f is a scalar multiple of x.
RankCode code_from_poly(const FieldCtx& F, const QPoly& f);
bool contains(const FieldCtx& F, const RankCode& code, const QPoly& h);

std::size_t poly_rank(const FieldCtx& F, const QPoly& h);

// A_0 .. A_n.
std::vector<std::uint64_t> rank_distribution(const FieldCtx& F, const RankCode& code,
                                             std::uint64_t budget = default_budget());
// Same count for C_f via the pairs (a, b); agrees with the span enumeration.
std::vector<std::uint64_t> rank_distribution_pairs(const FieldCtx& F, const QPoly& f,
                                                   std::uint64_t budget = default_budget());
bool is_mrd(const FieldCtx& F, std::size_t dim, const std::vector<std::uint64_t>& dist);
bool is_mrd(const FieldCtx& F, const RankCode& code, std::uint64_t budget = default_budget());

// gabidulin, gen_gabidulin (s), sheekey (delta), ltz (s, delta).
QPoly family(const FieldCtx& F, std::string_view name, std::uint32_t s = 1, FElem delta = FElem{0});

// Matrix code over F_q: M[i][j] is the i-th coordinate of h(w_j).
struct MatrixCode {
  std::uint32_t n = 0;
  std::vector<Matrix> basis;
  Matrix reduced;  // rows: flattened basis matrices in echelon form
  std::vector<std::size_t> pivots;
};

MatrixCode matrix_code(const FieldCtx& F, const RankCode& code);
MatrixCode matrix_code(const FieldCtx& F, const std::vector<Matrix>& gens);
MatrixCode transpose_code(const FieldCtx& F, const MatrixCode& c);
bool contains(const FieldCtx& F, const MatrixCode& c, const Matrix& m);
std::vector<std::uint64_t> rank_distribution(const FieldCtx& F, const MatrixCode& c,
                                             std::uint64_t budget = default_budget());

// All invertible n x n matrices over F_q.
std::vector<Matrix> general_linear_group(const FieldCtx& F, std::uint32_t n, std::uint64_t budget = default_budget());

// M -> A M^s B, or A (M^T)^s B when transpose is set; s = p^k on F_q.
struct CodeWitness {
  Matrix A, B;
  std::uint32_t k = 0;
  bool transpose = false;
};

Matrix apply(const FieldCtx& F, const CodeWitness& w, const Matrix& m);

std::optional<CodeWitness> code_equivalent_smallscale(const FieldCtx& F, const MatrixCode& c1, const MatrixCode& c2,
                                                      bool allow_transpose,
                                                      std::uint64_t budget = default_budget());

}  // namespace linset
