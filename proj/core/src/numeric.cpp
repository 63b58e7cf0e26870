#include "cayleylab/numeric.hpp"

#include <cctype>
#include <cstddef>

#include "cayleylab/errors.hpp"

namespace cayleylab {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

std::uint64_t floor_rational_power(std::uint64_t value, const BigRat& exponent) {
  if (exponent <= 0) throw DomainError("floor_rational_power: exponent must be positive");
  if (value == 0) return 0;
  const BigInt p = boost::multiprecision::numerator(exponent);
  const BigInt q = boost::multiprecision::denominator(exponent);
  const BigInt target = ipow(BigInt(value), p.convert_to<std::uint64_t>());
  const std::uint64_t qe = q.convert_to<std::uint64_t>();
  // largest b with b^q <= value^p
  BigInt lo = 0, hi = 1;
  while (ipow(hi, qe) <= target) hi <<= 1;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) / 2;
    if (ipow(mid, qe) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return lo.convert_to<std::uint64_t>();
}

std::uint64_t growth_alpha(std::uint64_t diameter) {
  // 5^a > diam^(1/8) is equivalent to 5^(8a) > diam.
  const BigInt p8 = ipow(BigInt(5), 8);
  BigInt current = p8;
  std::uint64_t alpha = 1;
  while (current <= diameter) {
    current *= p8;
    ++alpha;
  }
  return alpha;
}

BigRat parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational", 0);
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::size_t at) {
    std::string digits;
    while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) {
      digits.push_back(text[at]);
      ++at;
    }
    return std::pair{digits, at};
  };
  auto [whole, next] = read_digits(pos);
  if (whole.empty()) throw ParseError("expected digits in rational", pos);
  pos = next;
  BigRat value;
  if (pos < text.size() && text[pos] == '/') {
    auto [den, after] = read_digits(pos + 1);
    if (den.empty()) throw ParseError("expected denominator digits", pos + 1);
    if (after != text.size()) throw ParseError("trailing characters in rational", after);
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator", pos + 1);
    value = BigRat(BigInt(whole), d);
  } else if (pos < text.size() && text[pos] == '.') {
    auto [frac, after] = read_digits(pos + 1);
    if (frac.empty()) throw ParseError("expected fraction digits", pos + 1);
    if (after != text.size()) throw ParseError("trailing characters in rational", after);
    value = BigRat(BigInt(whole + frac), ipow(BigInt(10), frac.size()));
  } else {
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
    value = BigRat(BigInt(whole));
  }
  return negative ? -value : value;
}

std::string rational_to_string(const BigRat& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const BigRat& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace cayleylab
