#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace toda {

// Arbitrary precision rational, always canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts "p", "p/q" and finite decimals such as "-0.25" (converted exactly).
Rational parse_rational(std::string_view text);

// Canonical "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// Floor as an exact integer.
mpz_class floor(const Rational& q);

// Exact square root when q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

double to_double(const Rational& q);

RationalVector parse_rational_list(std::string_view comma_separated);

}  // namespace toda
