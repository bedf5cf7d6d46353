#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace reductlab {

// Exact arithmetic everywhere: rationals for geometry and algebra, arbitrary
// precision integers for the cleared forms of the verified inequalities.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "+p", "-p" or "p/q" into a canonical rational.
/// Throws Error on malformed input or a zero denominator.
Rat parse_rational(std::string_view token);

/// Canonical form: "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string rat_to_string(const Rat& value);

inline int sign_of(const Rat& value) { return sgn(value); }

BigInt big_pow(const BigInt& base, unsigned long exponent);

/// k^dim as an exact integer.
BigInt alphabet_power(int k, int dim);

}  // namespace reductlab
