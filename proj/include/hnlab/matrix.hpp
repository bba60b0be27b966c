#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnlab/rational.hpp"

namespace hnlab {

/// Dense row-major matrix. Instantiated with Rational for linear algebra and
/// with Poly where symbolic vectors are pushed through rational maps.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T{0});
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const std::vector<T>> cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged column");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(x.rows_, y.cols_, T{0});
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == T{0}) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] += y.data_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] -= y.data_[i];
    return x;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using RatVector = std::vector<Rational>;

/// m·v for a rational matrix and a vector over any module type S
/// (Rational or Poly). `zero` supplies the additive identity of S.
template <class S>
std::vector<S> apply(const RatMatrix& m, std::span<const S> v, const S& zero) {
  if (v.size() != m.cols()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<S> out(m.rows(), zero);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[i] += v[j] * m(i, j);
  return out;
}

inline RatVector apply(const RatMatrix& m, std::span<const Rational> v) {
  return apply<Rational>(m, v, Rational(0));
}

inline bool is_zero_vector(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Reduced row echelon form computed in place by Gauss-Jordan elimination;
/// returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }

inline Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  Rational det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Basis of {x : m·x = 0}; empty when the kernel is trivial.
inline std::vector<RatVector> solve_nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline bool jointly_independent(std::span<const RatVector> vectors) {
  if (vectors.empty()) return true;
  auto m = RatMatrix::from_columns(vectors, vectors.front().size());
  return rank(m) == vectors.size();
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// For a matrix B with independent columns, a matrix L with L·B = I.
/// Built from a maximal set of independent rows of B, so L·y recovers the
/// coordinates of any y in the column space exactly.
inline RatMatrix left_inverse(const RatMatrix& b) {
  auto bt = b.transposed();
  RatMatrix work = bt;
  auto rows = rref(work);  // pivot columns of Bᵀ = independent rows of B
  if (rows.size() != b.cols()) throw std::invalid_argument("left_inverse: columns are dependent");
  RatMatrix square(b.cols(), b.cols());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) square(k, j) = b(rows[k], j);
  auto sinv = inverse(square);
  if (!sinv) throw std::logic_error("left_inverse: selected rows are singular");
  RatMatrix l(b.cols(), b.rows(), Rational(0));
  for (std::size_t i = 0; i < b.cols(); ++i)
    for (std::size_t k = 0; k < rows.size(); ++k) l(i, rows[k]) = (*sinv)(i, k);
  return l;
}

/// Projection onto span(subspace) along span(complement). The two spans
/// must be independent; they need not fill the ambient space, in which case
/// the result is defined on their sum only and is returned in the
/// coordinates of the ambient space with the remainder sent to zero along a
/// row-selected left inverse.
inline RatMatrix projector_onto(std::span<const RatVector> subspace, std::span<const RatVector> complement) {
  std::vector<RatVector> all(subspace.begin(), subspace.end());
  all.insert(all.end(), complement.begin(), complement.end());
  if (all.empty()) throw std::invalid_argument("projector_onto: no vectors");
  const std::size_t n = all.front().size();
  for (const auto& v : all)
    if (v.size() != n) throw std::invalid_argument("projector_onto: ragged vectors");
  if (!jointly_independent(all)) throw std::invalid_argument("projector_onto: vectors are not jointly independent");

  auto basis = RatMatrix::from_columns(all, n);
  RatMatrix coords = all.size() == n ? *inverse(basis) : left_inverse(basis);
  RatMatrix keep(all.size(), all.size(), Rational(0));
  for (std::size_t i = 0; i < subspace.size(); ++i) keep(i, i) = 1;
  return basis * keep * coords;
}

}  // namespace hnlab
