#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace koszul {

/// Exact rational number, always kept in canonical form (gcd 1, positive denominator).
using Scalar = mpq_class;

/// Parses "p", "p/q" or "-p/q" (surrounding whitespace allowed). Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace koszul
