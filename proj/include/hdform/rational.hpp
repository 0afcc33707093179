#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hdform {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Builds a canonical rational from a (possibly unreduced) fraction.
/// Throws std::invalid_argument on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" (no spaces, optional leading '-') into canonical form.
Rational parse_rational(const std::string& text);

/// Canonical serialization: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

Rational pow_rational(const Rational& base, long exponent);

/// Exact d-th root over the rationals. For even d the nonnegative root is
/// returned. Absence of a rational root yields nullopt, not an error.
std::optional<Rational> rational_root_d(const Rational& value, int degree);

}  // namespace hdform
