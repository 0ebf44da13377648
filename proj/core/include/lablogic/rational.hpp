#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lablogic {

// Exact rationals throughout; every identity the library checks is an
// exact equality.
using Rational = mpq_class;

// Accepts "a/b", integers, and plain decimals ("0.25", "-1.5").
// Throws FormatError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace lablogic
