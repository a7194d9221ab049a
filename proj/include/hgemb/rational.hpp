#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hgemb {

// Exact rationals (always canonical: lowest terms, positive denominator) and
// arbitrary-precision integers, backed by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws InputError otherwise or on q == 0.
Rational parse_rational(std::string_view text);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
bool is_integral(const Rational& r);

}  // namespace hgemb
