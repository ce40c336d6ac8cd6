#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace virc1 {

// Exact rational scalar used throughout. Always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" with optional leading sign. Rejects anything else,
// including zero denominators. Result is canonical.
Rational rational_from_string(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

// Nonnegative rational square root, exact or nothing.
std::optional<Rational> exact_sqrt(const Rational& x);

bool is_integer(const Rational& r);

// Exact conversion; requires an integer that fits in long.
long to_long(const Rational& r);

} // namespace virc1
