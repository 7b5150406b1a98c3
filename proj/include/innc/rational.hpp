#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace innc {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q" (whitespace tolerated). Throws SchemaError.
Rational parse_rational(std::string_view text);

/// Parses a comma separated rational list such as "1/3,1/3,0".
RationalVector parse_rational_list(std::string_view text);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// q - floor(q), always in [0, 1).
Rational frac(const Rational& q);

bool is_integer(const Rational& q);

/// Componentwise fractional part.
RationalVector fractional_part_vector(const RationalVector& v);

Integer lcm_of(const Integer& a, const Integer& b);
Integer gcd_of(const Integer& a, const Integer& b);

/// Converts to long; throws InvalidArgument when out of range.
long to_long(const Integer& z);

}  // namespace innc
