#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayleylab {

// All pass/fail bounds are evaluated in exact arbitrary-precision
// arithmetic; doubles appear only in fitted exponents and log columns.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);
BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Largest b >= 0 with b^q <= value^p where exponent = p/q > 0.
/// This is floor(value^(p/q)) computed exactly.
std::uint64_t floor_rational_power(std::uint64_t value, const BigRat& exponent);

/// Smallest a >= 1 with 5^a > diameter^(1/8), i.e. 5^(8a) > diameter.
std::uint64_t growth_alpha(std::uint64_t diameter);

/// Accepts "5", "-3/4", "0.25" and the like; always exact.
BigRat parse_rational(const std::string& text);

/// "p/q" for non-integers, plain decimal digits otherwise.
std::string rational_to_string(const BigRat& value);

bool is_integer(const BigRat& value);

}  // namespace cayleylab
