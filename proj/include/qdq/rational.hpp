#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qdq {

using BigRational = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

/// Canonical "p/q" text form; the denominator is always written, even when 1.
std::string to_string(const BigRational& x);

/// Accepts "p/q" or a bare integer "p"; throws InvalidArgument otherwise.
BigRational parse_rational(std::string_view text);

BigInt lcm(const BigInt& a, const BigInt& b);

/// lcm of all denominators (1 for an empty list).
BigInt common_denominator(const std::vector<BigRational>& xs);

}  // namespace qdq
