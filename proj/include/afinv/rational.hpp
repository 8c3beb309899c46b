#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace afinv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" into a reduced rational. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Representative of q mod 1 in [0, 1).
Rational frac_mod1(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
std::int64_t lcm_int(std::int64_t a, std::int64_t b);

/// Distinct primes dividing |n| (n != 0), ascending.
std::vector<std::int64_t> prime_divisors(const Integer& n);

/// True iff q is nonzero and every prime in q's numerator or denominator is in `primes`.
bool is_s_unit(const Rational& q, const std::vector<std::int64_t>& primes);

/// Removes all factors of `primes` from numerator and denominator; keeps the sign.
Rational strip_primes(const Rational& q, const std::vector<std::int64_t>& primes);

} // namespace afinv
