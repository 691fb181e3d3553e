#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace braidcable {

// Arbitrary-precision rationals; mpq_class keeps numerator/denominator
// canonical after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& x);

// Parses "a" or "a/b" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace braidcable
