#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gcover {

// Canonical (lowest terms, positive denominator) by construction of mpq_class.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }

Rational inv(const Rational& a);
std::string to_string(const Rational& a);
Rational parse_rational(std::string_view s);

}  // namespace gcover
