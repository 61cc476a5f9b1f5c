#ifndef GAUSS2_MATRIX_HPP
#define GAUSS2_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "gauss2/prime_field.hpp"

namespace gauss2 {

/// Dense row-major matrix over a prime field. The field itself is not
/// stored; every operation that needs arithmetic takes the PrimeField.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elt& at(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return entries_[r * cols_ + c];
  }
  Elt at(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return entries_[r * cols_ + c];
  }

  std::span<Elt> row(std::size_t r) {
    assert(r < rows_);
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Elt> row(std::size_t r) const {
    assert(r < rows_);
    return {entries_.data() + r * cols_, cols_};
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elt> entries_;
};

/// Row echelon form with zero rows trimmed: mat has exactly `rank` rows and
/// pivot_cols is strictly increasing, one entry per row.
struct Echelon {
  Matrix mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Gaussian elimination with first-nonzero pivot selection (scan top-down in
/// the current column). Deterministic; the input row space is preserved.
Echelon echelonize(const Matrix& m, const PrimeField& F);

/// Echelon form of [base.mat; extra]. base being already in echelon form
/// makes this the incremental-stacking step of the rank chain.
Echelon rank_of_stack(const Echelon& base, const Matrix& extra,
                      const PrimeField& F);

/// Determinant mod p by elimination with first-nonzero pivoting, tracking the
/// row-swap sign.
Elt determinant(const Matrix& m, const PrimeField& F);

Matrix take_first_columns(const Matrix& m, std::size_t k);

Matrix vstack(const Matrix& top, const Matrix& bottom);

/// One vector from the null space of the echelonized system: free variables
/// are drawn uniformly at random, pivot variables are back-substituted.
std::vector<Elt> kernel_sample(const Echelon& e, const PrimeField& F,
                               std::mt19937_64& rng);

}  // namespace gauss2

#endif
