#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gcut {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// "p/q", or "n" when the denominator is one.
std::string to_string(const Rational& value);

/// Accepts "n", "-n", "p/q" and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);

Rational dot(const RationalVector& a, const RationalVector& b);

bool is_integral(const Rational& value);
bool is_zero(const RationalVector& v);

/// Smallest positive multiple of `v` with integer entries whose gcd is one.
/// Zero vectors come back unchanged.
RationalVector primitive_scaling(const RationalVector& v, Rational* factor = nullptr);

}  // namespace gcut
