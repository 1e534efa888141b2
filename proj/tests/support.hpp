#pragma once

// Seeded generators and brute-force oracles shared by the unit tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qdq/matrix.hpp"
#include "qdq/quasidet.hpp"
#include "qdq/ratfunc.hpp"

namespace qdq::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRational rational(long span = 9) {
    long num = integer(-span, span);
    long den = integer(1, span);
    BigRational r(num, den);
    r.canonicalize();
    return r;
  }

  BigRational nonzero_rational(long span = 9) {
    BigRational r;
    do r = rational(span);
    while (is_zero(r));
    return r;
  }

  Poly poly(std::size_t max_degree, long span = 5) {
    std::vector<BigRational> c(static_cast<std::size_t>(integer(0, static_cast<long>(max_degree))) + 1);
    for (auto& x : c) x = rational(span);
    return Poly(std::move(c));
  }

  RatFunc ratfunc(ScalarField f, std::size_t max_degree = 3) {
    Poly den;
    do den = poly(max_degree);
    while (den.is_zero());
    return RatFunc::fraction(poly(max_degree), den, f);
  }

  QMatrix qmatrix(std::size_t r, std::size_t c, long span = 9) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(span);
    return m;
  }

  // entries zero with probability 1/2, otherwise small rational functions
  Matrix sparse_matrix(std::size_t r, std::size_t c, ScalarField f) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (integer(0, 1)) m(i, j) = ratfunc(f, 1);
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Leibniz expansion, independent of any elimination code.
template <class T>
T leibniz_det(const DenseMatrix<T>& a) {
  const std::size_t m = a.rows();
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  T total = T(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (p[i] > p[j]) ++inversions;
    T term = T(1);
    for (std::size_t i = 0; i < m; ++i) term *= a(i, p[i]);
    if (inversions % 2) term = -term;
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

template <class T>
DenseMatrix<T> minor_of(const DenseMatrix<T>& a, std::size_t i, std::size_t j) {
  DenseMatrix<T> out(a.rows() - 1, a.cols() - 1);
  for (std::size_t r = 0, rr = 0; r < a.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < a.cols(); ++c) {
      if (c == j) continue;
      out(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return out;
}

inline NCSquare<RatFunc> ncsquare_of(const QMatrix& a) { return to_ncsquare(lift(a)); }

}  // namespace qdq::testing
