#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qdq/rational.hpp"

namespace qdq {

/// Dense univariate polynomial over Q in the indeterminate s, ascending degree.
/// The zero polynomial has no coefficients; otherwise the top coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const BigRational& c);
  explicit Poly(std::vector<BigRational> coeffs);

  static Poly monomial(const BigRational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// c * s^k for some c, k.
  bool is_monomial() const;
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Largest k with s^k dividing *this (0 for the zero polynomial).
  std::size_t valuation() const;

  const BigRational& lead() const { return c_.back(); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(0); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const BigRational& k);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRational& k) { return a *= k; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Multiply by s^k.
  Poly shifted_up(std::size_t k) const;
  /// Divide by s^k; requires k <= valuation().
  Poly shifted_down(std::size_t k) const;

  /// Euclidean division: returns (quotient, remainder). Throws ZeroInverse on b = 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact quotient; the remainder is assumed zero.
  static Poly exact_div(const Poly& a, const Poly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  Poly monic() const;
  BigRational eval(const BigRational& x) const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

}  // namespace qdq
