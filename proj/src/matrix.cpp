#include "gauss2/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gauss2 {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

// row_r -= (a[r][col] / pivot) * row_pivot, for columns >= col.
void eliminate_below(Matrix& a, std::size_t pivot_row, std::size_t col,
                     const PrimeField& F) {
  const Elt pivot_inv = F.inv(a.at(pivot_row, col));
  for (std::size_t r = pivot_row + 1; r < a.rows(); ++r) {
    const Elt head = a.at(r, col);
    if (head == 0) continue;
    const Elt factor = F.mul(head, pivot_inv);
    for (std::size_t c = col; c < a.cols(); ++c)
      a.at(r, c) = F.sub(a.at(r, c), F.mul(factor, a.at(pivot_row, c)));
  }
}

void swap_rows(Matrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  auto row1 = a.row(r1);
  auto row2 = a.row(r2);
  std::swap_ranges(row1.begin(), row1.end(), row2.begin());
}

}  // namespace

Echelon echelonize(const Matrix& m, const PrimeField& F) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t cursor = 0;
  for (std::size_t col = 0; col < a.cols() && cursor < a.rows(); ++col) {
    std::size_t pivot_row = cursor;
    while (pivot_row < a.rows() && a.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == a.rows()) continue;
    swap_rows(a, cursor, pivot_row);
    eliminate_below(a, cursor, col, F);
    pivots.push_back(col);
    ++cursor;
  }

  Matrix trimmed(pivots.size(), a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    auto src = a.row(r);
    std::copy(src.begin(), src.end(), trimmed.row(r).begin());
  }
  return Echelon{std::move(trimmed), pivots.size(), std::move(pivots)};
}

Echelon rank_of_stack(const Echelon& base, const Matrix& extra,
                      const PrimeField& F) {
  if (base.mat.cols() != extra.cols())
    throw std::invalid_argument("rank_of_stack: column count mismatch");
  return echelonize(vstack(base.mat, extra), F);
}

Elt determinant(const Matrix& m, const PrimeField& F) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  Matrix a = m;
  const std::size_t n = a.rows();
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    while (pivot_row < n && a.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == n) return 0;
    if (pivot_row != col) {
      swap_rows(a, col, pivot_row);
      negate = !negate;
    }
    eliminate_below(a, col, col, F);
  }
  Elt det = 1;
  for (std::size_t i = 0; i < n; ++i) det = F.mul(det, a.at(i, i));
  return negate ? F.neg(det) : det;
}

Matrix take_first_columns(const Matrix& m, std::size_t k) {
  if (k > m.cols())
    throw std::invalid_argument("take_first_columns: k exceeds column count");
  Matrix out(m.rows(), k);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r);
    std::copy_n(src.begin(), k, out.row(r).begin());
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols())
    throw std::invalid_argument("vstack: column count mismatch");
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) {
    auto src = top.row(r);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    auto src = bottom.row(r);
    std::copy(src.begin(), src.end(), out.row(top.rows() + r).begin());
  }
  return out;
}

std::vector<Elt> kernel_sample(const Echelon& e, const PrimeField& F,
                               std::mt19937_64& rng) {
  const std::size_t n = e.mat.cols();
  std::vector<Elt> s(n, 0);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) s[c] = rng() % F.modulus();
  for (std::size_t i = e.rank; i-- > 0;) {
    const std::size_t pc = e.pivot_cols[i];
    Elt acc = 0;
    for (std::size_t c = pc + 1; c < n; ++c)
      acc = F.add(acc, F.mul(e.mat.at(i, c), s[c]));
    s[pc] = F.neg(F.mul(acc, F.inv(e.mat.at(i, pc))));
  }
  return s;
}

}  // namespace gauss2
