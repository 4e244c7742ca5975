#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nijkit {

using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

/// Always emits "p/q", including q = 1.
std::string rational_to_pq(const Rational& q);

/// Emits "p" for integers and "p/q" otherwise.
std::string rational_to_string(const Rational& q);

}  // namespace nijkit
