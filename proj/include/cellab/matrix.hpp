#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cellab/scalars.hpp"

namespace cellab {

/// Dense matrix over an exact scalar type (Rational or Fp).
/// Row-major; all operations are exact and deterministic.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const K& fill = K())
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  static Matrix identity(int n, const K& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const K& bkj = b(k, j);
          if (!is_zero(bkj)) r(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend Matrix operator*(const K& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.e_) x = s * x;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero_matrix() const {
    for (const auto& x : e_)
      if (!is_zero(x)) return false;
    return true;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix: apply shape mismatch");
    std::vector<K> out(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }
  int rows_, cols_;
  std::vector<K> e_;
};

template <class K>
struct RrefResult {
  Matrix<K> mat;
  std::vector<int> pivots;  // pivot column per pivot row, increasing
};

/// Reduced row echelon form; unique for a given input. Total function.
template <class K>
RrefResult<K> rref(Matrix<K> m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) m.swap_rows(piv, r);
    K inv = one_like(m(r, c)) / m(r, c);
    for (int j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (int j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
int rank(const Matrix<K>& m) {
  return static_cast<int>(rref(m).pivots.size());
}

/// Determinant of a square matrix by fraction-producing elimination.
/// `one` supplies the field context (needed for the empty matrix and GF(p)).
template <class K>
K det(Matrix<K> m, const K& one) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return one;
  K result = one;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(m(i, c))) { piv = i; break; }
    if (piv < 0) return zero_like(result);
    if (piv != c) {
      m.swap_rows(piv, c);
      result = -result;
    }
    result *= m(c, c);
    K inv = one_like(m(c, c)) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (int j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return result;
}

/// Subspace of a coordinate space, held as the unique reduced echelon basis.
/// Structural equality therefore coincides with subspace equality.
template <class K>
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace from_spanning_rows(const Matrix<K>& rows) {
    Subspace s(rows.cols());
    RrefResult<K> r = rref(rows);
    int d = static_cast<int>(r.pivots.size());
    Matrix<K> b(d, rows.cols());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < rows.cols(); ++j) b(i, j) = r.mat(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduces v against the echelon basis; returns the residue.
  std::vector<K> reduce(std::vector<K> v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("Subspace: bad vector length");
    for (int i = 0; i < basis_.rows(); ++i) {
      const K& c = v[pivots_[i]];
      if (is_zero(c)) continue;
      K f = c;
      for (int j = pivots_[i]; j < ambient_; ++j)
        if (!is_zero(basis_(i, j))) v[j] -= f * basis_(i, j);
    }
    return v;
  }

  bool contains(const std::vector<K>& v) const {
    auto res = reduce(v);
    for (const auto& x : res)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_;
  Matrix<K> basis_;
  std::vector<int> pivots_;
};

/// Right nullspace {v : m v = 0}; dim = cols - rank.
/// `one` supplies the field context.
template <class K>
Subspace<K> nullspace(const Matrix<K>& m, const K& one) {
  RrefResult<K> r = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivots) is_pivot[c] = true;
  int nfree = cols - static_cast<int>(r.pivots.size());
  Matrix<K> rows(nfree, cols);
  int row = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    rows(row, f) = one;
    for (size_t k = 0; k < r.pivots.size(); ++k) {
      if (!is_zero(r.mat(static_cast<int>(k), f))) rows(row, r.pivots[k]) = -r.mat(static_cast<int>(k), f);
    }
    ++row;
  }
  return Subspace<K>::from_spanning_rows(rows);
}

/// One solution of a x = b if consistent. Dimension mismatch is an input error.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
  if (a.rows() != static_cast<int>(b.size())) throw std::invalid_argument("solve: dimension mismatch");
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult<K> r = rref(aug);
  for (int c : r.pivots)
    if (c == a.cols()) return std::nullopt;
  std::vector<K> x(a.cols());
  for (size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.mat(static_cast<int>(k), a.cols());
  // exact verification by substitution
  auto ax = a.apply(x);
  for (int i = 0; i < a.rows(); ++i)
    if (!(ax[i] == b[i])) throw std::logic_error("solve: verification failed");
  return x;
}

}  // namespace cellab
