#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kahler {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "4/5", "-3", "1.1" or "2.5e-1" into an exact rational (decimal
/// strings are read exactly, so "1.1" is 11/10). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// True iff q is an integer.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace kahler
