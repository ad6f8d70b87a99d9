#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rectrep {

// Exact coordinates. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// Accepts "p", "-p" and "p/q" (q != 0); the result is canonicalized.
// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

// Denominator is a power of two.
bool is_dyadic(const Rational& value);

// Lossy; only for drawing.
double to_double(const Rational& value);

}  // namespace rectrep
