#pragma once

// Exact integer linear algebra: dense matrices, Smith normal form with
// accumulated transforms, primitivity and the unimodularity test for
// simplicial cones.

#include <kdb/error.hpp>
#include <kdb/integer.hpp>

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace kdb {

using IntVector = std::vector<Integer>;

class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix must be at least 1x1");
  }

  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : IntegerMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      std::size_t j = 0;
      for (long long x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `ambient`).
  static IntegerMatrix from_columns(std::span<const IntVector> columns, std::size_t ambient) {
    IntegerMatrix m(ambient, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != ambient) throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient rank");
      for (std::size_t i = 0; i < ambient; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "product shape mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
inline Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithDecomposition {
  IntegerMatrix U;  // rows x rows, unimodular
  IntegerMatrix D;  // rows x cols, diagonal d1 | d2 | ... | dr, then zeros
  IntegerMatrix V;  // cols x cols, unimodular

  std::size_t rank() const {
    std::size_t r = 0;
    while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
    return r;
  }

  /// Nonzero diagonal entries d1 | d2 | ... | dr.
  IntVector invariant_factors() const {
    IntVector out;
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
    return out;
  }
};

/// Computes U, D, V with U * M * V = D. The pivot of each round is a
/// nonzero entry of minimal absolute value in the remaining block.
inline SmithDecomposition smith_normal_form(const IntegerMatrix& M) {
  const std::size_t rows = M.rows();
  const std::size_t cols = M.cols();
  IntegerMatrix A = M;
  IntegerMatrix U = IntegerMatrix::identity(rows);
  IntegerMatrix V = IntegerMatrix::identity(cols);

  auto row_op_swap = [&](std::size_t a, std::size_t b) { A.swap_rows(a, b); U.swap_rows(a, b); };
  auto col_op_swap = [&](std::size_t a, std::size_t b) { A.swap_cols(a, b); V.swap_cols(a, b); };
  auto row_op_add = [&](std::size_t dst, std::size_t src, const Integer& f) { A.add_row(dst, src, f); U.add_row(dst, src, f); };
  auto col_op_add = [&](std::size_t dst, std::size_t src, const Integer& f) { A.add_col(dst, src, f); V.add_col(dst, src, f); };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Move the minimal nonzero entry of the block to (t, t).
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (A(i, j) == 0) continue;
          Integer a = abs(A(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) {
        return {std::move(U), std::move(A), std::move(V)};
      }
      row_op_swap(t, pi);
      col_op_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (A(i, t) == 0) continue;
        Integer q = A(i, t) / A(t, t);
        row_op_add(i, t, -q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (A(t, j) == 0) continue;
        Integer q = A(t, j) / A(t, t);
        col_op_add(j, t, -q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility of the remaining block.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      row_op_add(t, bad_row, 1);
    }
    if (A(t, t) < 0) {
      A.negate_row(t);
      U.negate_row(t);
    }
  }
  return {std::move(U), std::move(A), std::move(V)};
}

inline std::size_t rank(const IntegerMatrix& M) { return smith_normal_form(M).rank(); }

/// v / gcd(v). Throws NonzeroRequired on the zero vector.
inline IntVector primitive_vector(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw Error(ErrorCode::NonzeroRequired, "primitive_vector of the zero vector");
  IntVector out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  return out;
}

inline IntVector primitive_vector(const IntVector& v) { return primitive_vector(std::span<const Integer>(v)); }

/// True iff the (linearly independent, primitive) rays extend to a basis of
/// the lattice, i.e. every invariant factor of the ray matrix is 1. This is
/// equally the smoothness test inside the saturated sublattice the rays span.
inline bool is_smooth_simplicial_cone(std::span<const IntVector> rays, std::size_t ambient_rank) {
  if (rays.empty()) return true;
  auto snf = smith_normal_form(IntegerMatrix::from_columns(rays, ambient_rank));
  if (snf.rank() != rays.size()) throw Error(ErrorCode::NotSimplicial, "rays are linearly dependent");
  for (const auto& d : snf.invariant_factors())
    if (d != 1) return false;
  return true;
}

}  // namespace kdb
