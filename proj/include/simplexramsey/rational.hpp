#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sr {

// Exact rational scalar used throughout the core. Floating point appears
// only in realize() and CLI display.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p/q", an integer string, or a finite decimal ("1.5" -> 3/2).
// Anything else (including binary doubles and irrational literals) is
// rejected so exactness survives the input boundary.
Rational parse_rational(std::string_view text);

// Renders in lowest terms: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace sr
