#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcut/rational.hpp"

namespace gcut {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector col(std::size_t c) const;
  void set_row(std::size_t r, const RationalVector& v);

  Matrix transpose() const;
  /// M·x
  RationalVector apply(const RationalVector& x) const;
  /// xᵀ·M
  RationalVector apply_left(const RationalVector& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : M x = 0}, one column per free column of rref(M), with the
/// free variable set to 1.
Matrix kernel_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(Matrix m);

/// Solution of M x = b if one exists (free variables set to zero).
std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b);

/// Integer matrices, used for lattice computations.
using IntegerMatrix = std::vector<IntegerVector>;

/// Basis (as rows) of the lattice {x ∈ Z^d : A x = 0}, where A has d columns.
IntegerMatrix integer_kernel(const IntegerMatrix& a, std::size_t d);

/// Determinant of a square integer matrix by fraction-free elimination.
Integer integer_determinant(IntegerMatrix m);

/// Index of the lattice spanned by `rows` inside Z^k; 0 when the rows do not span.
Integer lattice_index(IntegerMatrix rows, std::size_t k);

}  // namespace gcut
