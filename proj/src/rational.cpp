#include "strata/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

#include "strata/error.hpp"

namespace strata {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text, std::size_t offset) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw ParseError("empty number", offset + begin);

  std::string_view body = text.substr(begin, end - begin);
  bool negative = false;
  std::size_t sign_len = 0;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    sign_len = 1;
  }
  std::string_view digits = body.substr(sign_len);
  std::size_t slash = digits.find('/');
  std::string_view num = digits.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : digits.substr(slash + 1);

  if (!all_digits(num)) throw ParseError("invalid numerator '" + std::string(body) + "'", offset + begin);
  if (!all_digits(den))
    throw ParseError("invalid denominator '" + std::string(body) + "'", offset + begin + sign_len + slash + 1);

  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator", offset + begin + sign_len + slash + 1);
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
  Rational v(value);
  v.canonicalize();
  return v.get_str();
}

Rational exact_rational(Real value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite value to a rational");
  if (value == 0) return Rational(0);
  int exponent = 0;
  Real mantissa = std::frexp(std::fabs(value), &exponent);
  auto bits = static_cast<std::uint64_t>(std::ldexp(mantissa, 64));
  Integer m;
  mpz_set_ui(m.get_mpz_t(), static_cast<unsigned long>(bits));
  Rational r(m);
  int shift = exponent - 64;
  if (shift >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  return value < 0 ? Rational(-r) : r;
}

Real to_real(const Rational& value) {
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  if (num == 0) return 0;
  Integer a = abs(num);
  long bits_num = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  long bits_den = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  long shift = 66 - (bits_num - bits_den);
  Integer t;
  if (shift >= 0) {
    Integer scaled = a << static_cast<mp_bitcnt_t>(shift);
    t = scaled / den;
  } else {
    Integer scaled = den << static_cast<mp_bitcnt_t>(-shift);
    t = a / scaled;
  }
  Integer hi = t >> 64;
  Integer lo = t - (hi << 64);
  Real result = std::ldexp(static_cast<Real>(mpz_get_ui(hi.get_mpz_t())), 64) +
                static_cast<Real>(static_cast<std::uint64_t>(mpz_get_ui(lo.get_mpz_t())));
  result = std::ldexp(result, static_cast<int>(-shift));
  return num < 0 ? -result : result;
}

}  // namespace strata
