#include "linset/linalg.hpp"

#include <utility>

namespace linset {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FElem{1};
  return m;
}

std::vector<std::size_t> rref(const FieldCtx& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    }
    const FElem iv = F.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = F.mul(m.at(row, c), iv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      const FElem factor = m.at(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < m.cols; ++c) {
        m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const FieldCtx& F, Matrix m) { return rref(F, m).size(); }

Matrix nullspace(const FieldCtx& F, const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(F, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix out(m.cols - pivots.size(), m.cols);
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    out.at(k, free) = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) out.at(k, pivots[i]) = F.neg(r.at(i, free));
    ++k;
  }
  return out;
}

std::optional<std::vector<FElem>> solve(const FieldCtx& F, const Matrix& m, const std::vector<FElem>& b) {
  Matrix aug(m.rows, m.cols + 1);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  const auto pivots = rref(F, aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<FElem> x(m.cols, F.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
  return x;
}

std::optional<Matrix> inverse(const FieldCtx& F, const Matrix& m) {
  const std::size_t n = m.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = F.one();
  }
  const auto pivots = rref(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  }
  return out;
}

Matrix multiply(const FieldCtx& F, const Matrix& x, const Matrix& y) {
  Matrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const FElem a = x.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        out.at(i, j) = F.add(out.at(i, j), F.mul(a, y.at(k, j)));
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
  }
  return out;
}

}  // namespace linset
