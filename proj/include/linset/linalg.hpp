#pragma once

// Dense matrices over a FieldCtx. The same routines serve F_q (entries drawn
// from the subfield) and F_{q^n}.

#include <cstddef>
#include <optional>
#include <vector>

#include "linset/finitefield.hpp"

namespace linset {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FElem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  FElem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  FElem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Matrix identity(std::size_t n);
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

// Reduced row echelon form in place; returns the pivot columns. Zero rows are
// moved to the bottom.
std::vector<std::size_t> rref(const FieldCtx& F, Matrix& m);

std::size_t rank(const FieldCtx& F, Matrix m);

// Basis (as rows of the result) of {x : m x = 0}.
Matrix nullspace(const FieldCtx& F, const Matrix& m);

// Some solution of m x = b, or nullopt.
std::optional<std::vector<FElem>> solve(const FieldCtx& F, const Matrix& m, const std::vector<FElem>& b);

std::optional<Matrix> inverse(const FieldCtx& F, const Matrix& m);

Matrix multiply(const FieldCtx& F, const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& m);

}  // namespace linset
