#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chernslope {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical exact rendering: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& q);

/// Decimal rendering rounded (half away from zero) to `significant` digits,
/// fixed notation, trailing fractional zeros stripped. 98/15 -> "6.53333".
std::string to_decimal(const Rational& q, int significant = 6);

/// Parses `p`, `-p` or `p/q`. Throws ParseError on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, valid for any
/// integer n and k >= 0.
Integer binomial(long n, long k);

}  // namespace chernslope
