#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qsd {

/// Arbitrary-precision rational. Every derived quantity in the library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t value);
Rational make_rational(std::int64_t num, std::int64_t den);

bool is_integer(const Rational& q);

/// Value of an integral rational that fits in 64 bits; throws InvalidParameters otherwise.
std::int64_t to_int64(const Rational& q);

/// -1, 0 or +1.
int sign(const Rational& q);

/// Canonical reduced form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Inverse of to_string; throws InvalidParameters on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace qsd
