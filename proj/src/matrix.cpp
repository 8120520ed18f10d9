#include "gcut/matrix.hpp"

#include <utility>

#include "gcut/errors.hpp"

namespace gcut {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::AmbientMismatch, "ragged matrix rows");
    m.set_row(r, rows[r]);
  }
  return m;
}

RationalVector Matrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector Matrix::col(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const RationalVector& v) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector Matrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::AmbientMismatch, "vector length does not match matrix columns");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(x[c]) != 0) s += a * x[c];
    }
    y[r] = s;
  }
  return y;
}

RationalVector Matrix::apply_left(const RationalVector& x) const {
  if (x.size() != rows_) throw Error(ErrorKind::AmbientMismatch, "vector length does not match matrix rows");
  RationalVector y(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (sgn(x[r]) == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) y[c] += x[r] * a;
    }
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::AmbientMismatch, "matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) != 0) p(i, j) += x * y;
      }
    }
  }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::AmbientMismatch, "matrix sum shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::AmbientMismatch, "matrix difference shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    }
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(lead_row, j)) != 0) m(r, j) -= f * m(lead_row, j);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix k(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t f = free_cols[j];
    k(f, j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = -e.reduced(r, f);
  }
  return k;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::AmbientMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::AmbientMismatch, "right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

namespace {

// Column operation col_j -= q * col_k on both the working matrix and the
// accumulated unimodular transform.
void column_axpy(IntegerMatrix& a, IntegerMatrix& u, std::size_t j, std::size_t k, const Integer& q) {
  for (auto& row : a) row[j] -= q * row[k];
  for (auto& row : u) row[j] -= q * row[k];
}

void column_swap(IntegerMatrix& a, IntegerMatrix& u, std::size_t j, std::size_t k) {
  for (auto& row : a) std::swap(row[j], row[k]);
  for (auto& row : u) std::swap(row[j], row[k]);
}

}  // namespace

IntegerMatrix integer_kernel(const IntegerMatrix& input, std::size_t d) {
  IntegerMatrix a = input;
  IntegerMatrix u(d, IntegerVector(d));
  for (std::size_t i = 0; i < d; ++i) u[i][i] = 1;

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < a.size() && pivot < d; ++r) {
    // Euclid across columns pivot..d-1 until only column `pivot` is nonzero in row r.
    for (;;) {
      std::size_t best = d;
      for (std::size_t c = pivot; c < d; ++c) {
        if (sgn(a[r][c]) == 0) continue;
        if (best == d || abs(a[r][c]) < abs(a[r][best])) best = c;
      }
      if (best == d) break;
      if (best != pivot) column_swap(a, u, best, pivot);
      bool done = true;
      for (std::size_t c = pivot + 1; c < d; ++c) {
        if (sgn(a[r][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[r][pivot].get_mpz_t());
        column_axpy(a, u, c, pivot, q);
        if (sgn(a[r][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(a[r][pivot]) != 0) ++pivot;
  }

  IntegerMatrix basis;
  for (std::size_t c = pivot; c < d; ++c) {
    IntegerVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = u[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Integer integer_determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  Integer det = m[n - 1][n - 1];
  return sign < 0 ? Integer(-det) : det;
}


Integer lattice_index(IntegerMatrix rows, std::size_t k) {
  Integer index = 1;
  std::size_t pivot = 0;
  for (std::size_t c = 0; c < k; ++c) {
    // Euclid down column c over rows pivot.. until a single nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      }
      if (best == rows.size()) return 0;
      std::swap(rows[pivot], rows[best]);
      bool done = true;
      for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot][c].get_mpz_t());
        for (std::size_t j = c; j < k; ++j) rows[r][j] -= q * rows[pivot][j];
        if (sgn(rows[r][c]) != 0) done = false;
      }
      if (done) break;
    }
    index *= abs(rows[pivot][c]);
    ++pivot;
  }
  return index;
}

}  // namespace gcut
