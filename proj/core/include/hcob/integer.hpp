#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcob {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

/// Non-negative remainder of a modulo m, for m > 0.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// Extended gcd: returns g = gcd(a, b) >= 0 with a*x + b*y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

/// Overflow-checked int64 arithmetic. Throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace hcob
