#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prequant {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonicalized: gcd(num, den) = 1, den > 0

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Parses "p/q" or "p" (optional sign). Floating-point literals are rejected.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

Integer gcd(std::span<const Integer> values);
Integer lcm(const Integer& a, const Integer& b);

bool is_integral(const Rational& value);

// Comma-separated vectors, e.g. "1,-1/2,3". Empty text gives an empty vector.
RatVector parse_rational_list(std::string_view text);
IntVector parse_integer_list(std::string_view text);
std::string join(std::span<const Rational> values, std::string_view sep = ",");
std::string join(std::span<const Integer> values, std::string_view sep = ",");
std::string join(std::span<const int> values, std::string_view sep = ",");

RatVector to_rational(std::span<const Integer> values);

// Returns the integer vector if every entry is integral.
std::optional<IntVector> to_integral(std::span<const Rational> values);

double to_double(const Rational& value);

}  // namespace prequant
