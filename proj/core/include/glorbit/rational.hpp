#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace glorbit {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a", "a/b" (whitespace tolerated). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den", with the denominator omitted when it is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace glorbit
