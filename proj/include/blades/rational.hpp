#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blades {

/// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;

/// Lowest-terms "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace blades
