#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypercover {

using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on junk or q = 0.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

}  // namespace hypercover
