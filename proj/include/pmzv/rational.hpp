#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pmzv {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text form: "a" or "a/b" with b > 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "a", "-a", "a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Rational rational_pow(const Rational& base, long exponent);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace pmzv
