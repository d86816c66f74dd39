#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pierce {

using Integer = mpz_class;
/// Always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q", "p" or a plain decimal literal such as "0.2425".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Renders as "p/q", reduced. Integers render as "p/1".
std::string format_rational(const Rational& x);

/// Decimal rendering with `digits` places after the point, round half away
/// from zero. Display only.
std::string to_decimal(const Rational& x, int digits);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Narrowing conversion, valid only when z fits.
bool fits_u64(const Integer& z);
std::uint64_t to_u64(const Integer& z);
Integer from_u64(std::uint64_t v);

}  // namespace pierce
