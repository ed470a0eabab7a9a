#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace strata {

using Integer = mpz_class;
using Rational = mpq_class;

/// Working precision of the floating-point geometry.
using Real = long double;

/// Parses "p/q", "-p/q" or an integer. Surrounding whitespace is ignored.
/// `offset` is added to the reported error position.
Rational parse_rational(std::string_view text, std::size_t offset = 0);

/// "p/q" or "p" in canonical (reduced) form.
std::string to_string(const Rational& value);

/// Exact conversion; every finite binary floating value is a dyadic rational.
Rational exact_rational(Real value);

/// Correctly scaled conversion to extended precision.
Real to_real(const Rational& value);

}  // namespace strata
