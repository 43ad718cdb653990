#pragma once

// Exact scalars. Everything in the library is built on GMP's canonical
// rationals; mpq_class keeps numerator/denominator reduced with a positive
// denominator after every arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace shapetile {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds p/q in canonical form. Throws std::invalid_argument when q == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p", "p/q", or a finite decimal such as "-1.25".
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Smallest prime factor of |n|; 2 for n == 0 (every prime divides zero).
/// Requires |n| >= 2 otherwise.
Integer smallest_prime_factor(const Integer& n);

}  // namespace shapetile
