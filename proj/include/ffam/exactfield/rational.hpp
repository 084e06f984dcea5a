#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ffam {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms; integers print without a denominator.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

}  // namespace ffam
