#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bfc {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses `a` or `a/b` (optional leading '-'); throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced `a/b`, integers without a denominator.
std::string to_string(const Rational& value);

} // namespace bfc
