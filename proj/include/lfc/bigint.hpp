#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lfc {

using Int = mpz_class;
using Rational = mpq_class;

Int ipow(const Int& base, std::uint64_t exponent);
inline Int ipow(long base, std::uint64_t exponent) { return ipow(Int(base), exponent); }

// num/den in canonical form (GMP rational arithmetic requires it).
Rational frac(const Int& num, const Int& den);

// num / den, throwing InvariantViolation (tagged with `what`) unless den | num.
Int exact_div(const Int& num, const Int& den, std::string_view what);

// Numerator of r, throwing InvariantViolation unless r is an integer.
Int to_integer(const Rational& r, std::string_view what);

Int gcd(const Int& a, const Int& b);

// Deterministic primality test (trial division up to 2^32, then BPSW-grade
// Miller-Rabin from GMP with enough rounds to be exact in practice).
bool is_prime(const Int& n);

// p-adic valuation of a positive integer n.
unsigned valuation(const Int& n, const Int& p);

inline std::string to_decimal(const Int& n) { return n.get_str(10); }

}  // namespace lfc
