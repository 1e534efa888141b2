#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qdq/errors.hpp"
#include "qdq/ratfunc.hpp"

namespace qdq {

/// Dense row-major matrix over an exact scalar type (RatFunc or BigRational).
template <class T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static DenseMatrix diagonal(std::span<const T> d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Rows given as nested lists; all rows must have equal length.
  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return DenseMatrix();
    DenseMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!qdq::is_zero(x)) return false;
    }
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const auto& x : a_) k += qdq::is_zero(x) ? 0 : 1;
    return k;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix operator-() const {
    DenseMatrix r = *this;
    for (auto& x : r.a_) {
      if (!qdq::is_zero(x)) x = -x;
    }
    return r;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!qdq::is_zero(o.a_[k])) a_[k] += o.a_[k];
    }
    return *this;
  }

  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!qdq::is_zero(o.a_[k])) a_[k] -= o.a_[k];
    }
    return *this;
  }

  DenseMatrix& operator*=(const T& k) {
    for (auto& x : a_) {
      if (!qdq::is_zero(x)) x = x * k;
    }
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const T& k) { return a *= k; }
  friend DenseMatrix operator*(const T& k, DenseMatrix a) { return a *= k; }

  /// Product skipping zero entries of both factors.
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (qdq::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (qdq::is_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// First (row, col) in row-major order where the two differ.
  friend std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const DenseMatrix& a,
                                                                           const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("compare shape mismatch");
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!(a(i, j) == b(i, j))) return std::make_pair(i, j);
    return std::nullopt;
  }

  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    DenseMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  DenseMatrix column(std::size_t c) const { return block(0, c, rows_, 1); }

  const std::vector<T>& data() const { return a_; }

 private:
  void check_same_shape(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

template <class T>
bool is_zero(const DenseMatrix<T>& m) {
  return m.is_zero();
}

using Matrix = DenseMatrix<RatFunc>;
using QMatrix = DenseMatrix<BigRational>;

/// Result of Gauss-Jordan reduction.
template <class T>
struct Echelon {
  DenseMatrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
};

/// Reduced row echelon form with first-nonzero pivot selection.
template <class T>
Echelon<T> rref(DenseMatrix<T> a) {
  Echelon<T> out;
  std::size_t row = 0;
  const std::size_t nr = a.rows(), nc = a.cols();
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t p = row;
    while (p < nr && is_zero(a(p, col))) ++p;
    if (p == nr) continue;
    if (p != row)
      for (std::size_t j = 0; j < nc; ++j) std::swap(a(p, j), a(row, j));
    const T inv = T(1) / a(row, col);
    std::vector<std::size_t> support;
    for (std::size_t j = col; j < nc; ++j) {
      if (!is_zero(a(row, j))) {
        a(row, j) = a(row, j) * inv;
        support.push_back(j);
      }
    }
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const T f = a(r, col);
      for (std::size_t j : support) a(r, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class T>
std::size_t rank(const DenseMatrix<T>& a) {
  return rref(a).pivots.size();
}

/// Exact inverse by Gauss-Jordan on [A | I]. Throws Singular.
template <class T>
DenseMatrix<T> gauss_invert(const DenseMatrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  DenseMatrix<T> aug(n, 2 * n);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = T(1);
  Echelon<T> e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Singular();
  return e.reduced.block(0, n, n, n);
}

/// Basis of the right kernel. One vector per free column (ascending), each
/// scaled so that its first nonzero coordinate is 1.
template <class T>
std::vector<DenseMatrix<T>> kernel_basis(const DenseMatrix<T>& a) {
  Echelon<T> e = rref(a);
  const std::size_t nc = a.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<DenseMatrix<T>> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    DenseMatrix<T> v(nc, 1);
    v(f, 0) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (!is_zero(e.reduced(r, f))) v(e.pivots[r], 0) = -e.reduced(r, f);
    }
    std::size_t first = 0;
    while (is_zero(v(first, 0))) ++first;
    if (!(v(first, 0) == T(1))) v *= T(1) / v(first, 0);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rows of the reduced echelon form of the row span (zero rows dropped).
template <class T>
DenseMatrix<T> row_space_basis(const DenseMatrix<T>& a) {
  Echelon<T> e = rref(a);
  return e.reduced.block(0, 0, e.pivots.size(), a.cols());
}

/// Kronecker product: (a (x) b)[(i,k),(j,l)] = a[i,j] b[k,l], left factor most significant.
template <class T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (is_zero(b(k, l))) continue;
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    }
  return r;
}

/// Index bookkeeping for V^{(x)k} with dim V = n: v_{i1}(x)...(x)v_{ik} sits at
/// sum_j (i_j - 1) n^{k-j}. Factor indices are 1-based, linear indices 0-based.
struct TensorIndexing {
  std::size_t n;
  std::size_t legs;

  std::size_t dim() const;
  std::size_t linear(std::span<const std::size_t> factors) const;
  std::size_t linear(std::initializer_list<std::size_t> factors) const {
    return linear(std::span<const std::size_t>(factors.begin(), factors.size()));
  }
  std::vector<std::size_t> factors(std::size_t linear) const;
};

/// Operator on V^{(x)k} acting as `op` on the listed legs (1-based, in the given
/// order) and as the identity on the others.
Matrix leg_embed(const Matrix& op, std::span<const std::size_t> legs, std::size_t n, std::size_t k);
Matrix leg_embed(const Matrix& op, std::initializer_list<std::size_t> legs, std::size_t n, std::size_t k);

/// The flip v_i (x) v_j -> v_j (x) v_i on V (x) V.
Matrix flip_perm(std::size_t n);

/// Elementary matrix E_{ij} (1-based) of size n.
Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j);

/// Entrywise substitution s = x.
QMatrix evaluate(const Matrix& m, const BigRational& x);

/// Lift a rational matrix to constant entries.
Matrix lift(const QMatrix& m);

}  // namespace qdq
