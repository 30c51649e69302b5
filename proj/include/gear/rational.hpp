#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gear/matrix.hpp"

namespace gear {

// num/den in canonical form. Throws std::domain_error on zero denominator.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// Best rational approximation of x with denominator at most max_den
// (continued-fraction convergents and semiconvergents).
Rational nearest_rational(double x, std::int64_t max_den);

RationalMatrix nearest_rational(const FloatMatrix& m, std::int64_t max_den);

}  // namespace gear
