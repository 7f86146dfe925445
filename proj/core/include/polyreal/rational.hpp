#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyreal {

/// Arbitrary-precision rational, always kept canonical (lowest terms).
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional sign); throws ParseError on bad input.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace polyreal
