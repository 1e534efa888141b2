#pragma once

// Quasideterminants and ordered products of corner quasiminors over an entry
// ring that supports exact +, -, * and inversion of square matrices over it.
// Instantiated for scalar entries (RatFunc) and operator entries (Matrix).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "qdq/block_matrix.hpp"
#include "qdq/errors.hpp"
#include "qdq/matrix.hpp"

namespace qdq {

/// Square m x m matrix over an entry ring; labels are 1-based.
template <class E>
class NCSquare {
 public:
  NCSquare() = default;
  NCSquare(std::size_t m, const E& fill) : m_(m), e_(m * m, fill) {}
  NCSquare(std::size_t m, std::vector<E> entries) : m_(m), e_(std::move(entries)) {
    if (e_.size() != m * m) throw DimensionMismatch("entry count is not m^2");
  }

  std::size_t size() const { return m_; }

  E& at(std::size_t i, std::size_t j) { return e_[(i - 1) * m_ + (j - 1)]; }
  const E& at(std::size_t i, std::size_t j) const { return e_[(i - 1) * m_ + (j - 1)]; }

  /// X^{ij}: row i and column j removed.
  NCSquare punctured(std::size_t i, std::size_t j) const {
    check_label(i);
    check_label(j);
    std::vector<E> out;
    out.reserve((m_ - 1) * (m_ - 1));
    for (std::size_t r = 1; r <= m_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c <= m_; ++c)
        if (c != j) out.push_back(at(r, c));
    }
    return NCSquare(m_ - 1, std::move(out));
  }

  /// Upper-left k x k corner, i.e. rows and columns k+1..m erased.
  NCSquare corner(std::size_t k) const {
    if (k < 1 || k > m_) throw InvalidArgument("corner size out of range");
    std::vector<E> out;
    out.reserve(k * k);
    for (std::size_t r = 1; r <= k; ++r)
      for (std::size_t c = 1; c <= k; ++c) out.push_back(at(r, c));
    return NCSquare(k, std::move(out));
  }

  friend NCSquare operator*(const NCSquare& a, const NCSquare& b) {
    if (a.m_ != b.m_) throw DimensionMismatch("NCSquare product size mismatch");
    NCSquare c = a;
    for (std::size_t i = 1; i <= a.m_; ++i)
      for (std::size_t j = 1; j <= a.m_; ++j) {
        E acc = a.at(i, 1) * b.at(1, j);
        for (std::size_t k = 2; k <= a.m_; ++k) acc += a.at(i, k) * b.at(k, j);
        c.at(i, j) = std::move(acc);
      }
    return c;
  }

  friend bool operator==(const NCSquare& a, const NCSquare& b) = default;

  const std::vector<E>& entries() const { return e_; }

 private:
  void check_label(std::size_t i) const {
    if (i < 1 || i > m_) throw InvalidArgument("label out of range: " + std::to_string(i));
  }

  std::size_t m_ = 0;
  std::vector<E> e_;
};

/// Ring operations the quasideterminant code needs beyond +, -, *.
template <class E>
struct EntryRing;

template <>
struct EntryRing<RatFunc> {
  static RatFunc zero_like(const RatFunc&) { return RatFunc(); }
  static RatFunc one_like(const RatFunc&) { return RatFunc(1); }
  static RatFunc invert(const RatFunc& x) { return x.inverse(); }
  static NCSquare<RatFunc> invert_square(const NCSquare<RatFunc>& x);
};

template <>
struct EntryRing<Matrix> {
  static Matrix zero_like(const Matrix& x) { return Matrix(x.rows(), x.cols()); }
  static Matrix one_like(const Matrix& x) { return Matrix::identity(x.rows()); }
  static Matrix invert(const Matrix& x) { return gauss_invert(x); }
  static NCSquare<Matrix> invert_square(const NCSquare<Matrix>& x);
};

NCSquare<RatFunc> to_ncsquare(const Matrix& m);
Matrix to_matrix(const NCSquare<RatFunc>& x);
NCSquare<Matrix> to_ncsquare(const BlockMatrix& b);
BlockMatrix to_block_matrix(const NCSquare<Matrix>& x);

/// Permutation sigma of {1..m} in one-line notation.
class SigmaOrder {
 public:
  explicit SigmaOrder(std::vector<std::size_t> one_line);
  static SigmaOrder identity(std::size_t m);
  /// Digits such as "231" (m <= 9).
  static SigmaOrder parse(std::string_view digits);
  /// All of S_m in lexicographic order.
  static std::vector<SigmaOrder> all(std::size_t m);

  std::size_t size() const { return p_.size(); }
  /// sigma(k), 1-based.
  std::size_t operator()(std::size_t k) const { return p_[k - 1]; }
  std::string str() const;
  friend bool operator==(const SigmaOrder&, const SigmaOrder&) = default;

 private:
  std::vector<std::size_t> p_;
};

/// |X|_{ij} = x_ij - r_i^{(j)} (X^{ij})^{-1} c_j^{(i)}, products in the written order.
/// Throws SubmatrixSingular(i, j) when X^{ij} is not invertible.
template <class E>
E quasideterminant(const NCSquare<E>& x, std::size_t i, std::size_t j) {
  const std::size_t m = x.size();
  if (i < 1 || i > m || j < 1 || j > m) throw InvalidArgument("quasideterminant label out of range");
  if (m == 1) return x.at(1, 1);
  NCSquare<E> inv;
  try {
    inv = EntryRing<E>::invert_square(x.punctured(i, j));
  } catch (const Singular&) {
    throw SubmatrixSingular(i, j);
  } catch (const ZeroInverse&) {
    throw SubmatrixSingular(i, j);
  }
  std::vector<E> row, col;
  for (std::size_t k = 1; k <= m; ++k) {
    if (k != j) row.push_back(x.at(i, k));
    if (k != i) col.push_back(x.at(k, j));
  }
  // v = row * inv, then correction = v * col
  E correction = EntryRing<E>::zero_like(x.at(i, j));
  for (std::size_t b = 0; b + 1 < m; ++b) {
    E v = EntryRing<E>::zero_like(x.at(i, j));
    for (std::size_t a = 0; a + 1 < m; ++a) {
      if (is_zero(row[a])) continue;
      v += row[a] * inv.at(a + 1, b + 1);
    }
    if (is_zero(v) || is_zero(col[b])) continue;
    correction += v * col[b];
  }
  E result = x.at(i, j);
  result -= correction;
  return result;
}

/// Factor list (|X|_mm, |X^{mm}|_{m-1,m-1}, ..., x_11) and its sigma-ordered product.
template <class E>
struct DetSigma {
  E value;
  std::vector<E> factors;
};

/// Corner quasiminors a_1 = |X|_mm, a_k = |X^{m..m-k+2}|_{m-k+1,m-k+1}, a_m = x_11.
template <class E>
std::vector<E> quasiminor_factors(const NCSquare<E>& x) {
  const std::size_t m = x.size();
  std::vector<E> factors;
  factors.reserve(m);
  for (std::size_t c = m; c >= 1; --c) {
    NCSquare<E> cx = c == m ? x : x.corner(c);
    factors.push_back(quasideterminant(cx, c, c));
  }
  return factors;
}

/// mu_sigma(a_1..a_m) = a_{sigma 1} ... a_{sigma m}.
template <class E>
E ordered_product(const std::vector<E>& factors, const SigmaOrder& sigma) {
  if (sigma.size() != factors.size()) throw DimensionMismatch("sigma has the wrong size");
  E acc = factors[sigma(1) - 1];
  for (std::size_t k = 2; k <= sigma.size(); ++k) acc = acc * factors[sigma(k) - 1];
  return acc;
}

template <class E>
DetSigma<E> det_sigma(const NCSquare<E>& x, const SigmaOrder& sigma) {
  DetSigma<E> out;
  out.factors = quasiminor_factors(x);
  out.value = ordered_product(out.factors, sigma);
  return out;
}

/// Entry (i,j) of the result is |X|_{ji}^{-1}. With scalar entries an undefined
/// |X|_{ji} (singular X^{ji}, X invertible) contributes the entry 0.
template <class E>
NCSquare<E> inverse_via_quasiminors(const NCSquare<E>& x) {
  const std::size_t m = x.size();
  NCSquare<E> out = x;
  std::optional<bool> invertible;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      try {
        out.at(i, j) = EntryRing<E>::invert(quasideterminant(x, j, i));
      } catch (const SubmatrixSingular&) {
        if constexpr (!std::is_same_v<E, RatFunc>) {
          throw;
        } else {
          if (!invertible) invertible = rank(to_matrix(x)) == m;
          if (!*invertible) throw;
          out.at(i, j) = RatFunc();
        }
      }
    }
  return out;
}

template <class E>
NCSquare<E> identity_like(const NCSquare<E>& x) {
  NCSquare<E> id = x;
  for (std::size_t i = 1; i <= x.size(); ++i)
    for (std::size_t j = 1; j <= x.size(); ++j)
      id.at(i, j) = i == j ? EntryRing<E>::one_like(x.at(i, j)) : EntryRing<E>::zero_like(x.at(i, j));
  return id;
}

/// True iff det_sigma(Z X Y) = det_sigma(X) exactly, for Z lower and Y upper
/// uni-triangular (checked; InvalidArgument otherwise).
template <class E>
bool triangular_invariance_check(const NCSquare<E>& x, const NCSquare<E>& z, const NCSquare<E>& y,
                                 const SigmaOrder& sigma) {
  const std::size_t m = x.size();
  if (z.size() != m || y.size() != m) throw DimensionMismatch("triangular factor size mismatch");
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      const E one = EntryRing<E>::one_like(x.at(i, j));
      if (i == j) {
        if (!(z.at(i, j) == one) || !(y.at(i, j) == one))
          throw InvalidArgument("triangular factor is not unipotent");
      } else if (i < j && !is_zero(z.at(i, j))) {
        throw InvalidArgument("Z is not lower triangular");
      } else if (i > j && !is_zero(y.at(i, j))) {
        throw InvalidArgument("Y is not upper triangular");
      }
    }
  return det_sigma(z * x * y, sigma).value == det_sigma(x, sigma).value;
}

}  // namespace qdq
