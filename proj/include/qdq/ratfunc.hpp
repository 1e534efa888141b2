#pragma once

#include <cstdint>
#include <string>

#include "qdq/poly.hpp"
#include "qdq/rational.hpp"

namespace qdq {

/// The coefficient field Q(s) together with the identification q = s^M.
/// M (the root order) lets q^a be represented for every rational a whose
/// denominator divides M.
struct ScalarField {
  std::uint32_t root_order = 1;

  explicit ScalarField(std::uint32_t m = 1);
  friend bool operator==(ScalarField, ScalarField) = default;
};

/// Exact element of Q(s) in canonical form num/den with den monic and
/// gcd(num, den) = 1.
///
/// Every non-constant value remembers the root order of the field it was built
/// in; constants are shared by all fields and carry tag 0. Combining two
/// non-constant values from different fields throws FieldMismatch.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const BigRational& c);  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(BigRational(c)) {}   // NOLINT(google-explicit-constructor)

  /// num/den brought to canonical form. Throws ZeroInverse if den = 0.
  static RatFunc fraction(Poly num, Poly den, ScalarField field);
  /// The indeterminate s.
  static RatFunc s(ScalarField field);
  /// q = s^M.
  static RatFunc q(ScalarField field);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  /// Root order tag, 0 for constants.
  std::uint32_t tag() const { return tag_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant; throws InvalidArgument otherwise.
  BigRational constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// Throws ZeroInverse on zero.
  RatFunc inverse() const;
  RatFunc pow(long e) const;

  /// Value at s = x; throws ZeroInverse at a pole.
  BigRational eval(const BigRational& x) const;

  /// Human-readable rendering such as "(s^4 - 1)/(s^2)".
  std::string str() const;

 private:
  Poly num_;
  Poly den_ = Poly(BigRational(1));
  std::uint32_t tag_ = 0;

  void retag(std::uint32_t merged);
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

/// q^r = s^{rM}. Throws NonRepresentableExponent when r*M is not an integer.
RatFunc q_power(const BigRational& r, ScalarField field);

}  // namespace qdq
