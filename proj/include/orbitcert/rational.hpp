#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace orbitcert {

// Exact rationals. mpq_class keeps values in lowest terms after every
// arithmetic operation; only string construction needs canonicalize().
using Rational = mpq_class;

// num/den reduced to lowest terms. Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else
// (decimals are rejected: inputs must be exact).
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// Comma-separated list of rationals, whitespace tolerated.
std::vector<Rational> parse_rational_list(std::string_view text);

// Comma-separated list of integers.
std::vector<int> parse_int_list(std::string_view text);

} // namespace orbitcert
