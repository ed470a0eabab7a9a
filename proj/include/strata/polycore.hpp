#pragma once

// Exact univariate polynomial arithmetic over the rationals, real root
// isolation and exact multiplicity vectors.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strata/mv.hpp"
#include "strata/rational.hpp"
#include "strata/roots.hpp"

namespace strata::polycore {

/// Dense polynomial over Q, coefficients stored in ascending degree order and
/// kept trimmed (no zero leading coefficient). The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending) : Polynomial(std::vector<Rational>(ascending)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int k);
  /// x - root
  static Polynomial linear(const Rational& root);
  /// Degree-descending coefficient list, as in the text format.
  static Polynomial from_descending(std::span<const Rational> coeffs);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  /// Coefficient of x^k; zero outside the stored range.
  Rational coeff(int k) const;
  const Rational& leading() const;
  std::span<const Rational> ascending() const noexcept { return c_; }
  std::vector<Rational> descending() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;
  /// Sign as x -> +inf (positive = true) or -inf.
  int sign_at_infinity(bool positive) const;

  Polynomial monic() const;
  Polynomial scaled(const Rational& k) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws DomainError on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws DomainError if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned e);
Polynomial derivative(const Polynomial& p);

/// Monic gcd via a primitive polynomial remainder sequence over Z.
/// Throws DomainError if both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Integer primitive associate with positive leading coefficient.
std::vector<Integer> primitive_integer(const Polynomial& p);

/// x^n + a_1 x^(n-1) + ... + a_n with exact rational a_i, n >= 1.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(std::vector<Rational> coeffs);

  int degree() const noexcept { return static_cast<int>(a_.size()); }
  /// a_1 .. a_n.
  std::span<const Rational> coeffs() const noexcept { return a_; }
  Polynomial to_polynomial() const;
  Rational operator()(const Rational& x) const { return to_polynomial()(x); }

  /// Throws DomainError unless p is monic of degree >= 1.
  static MonicPolynomial from_polynomial(const Polynomial& p);

  /// Degree-descending comma-separated list including the leading 1,
  /// e.g. "1,0,-2,0,1". Whitespace is ignored. Throws ParseError.
  static MonicPolynomial parse(std::string_view text);
  std::string to_text() const;

  friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

 private:
  std::vector<Rational> a_;
};

struct SquareFreePart {
  Polynomial factor;
  int multiplicity;
};

/// Yun decomposition p = prod factor^multiplicity, factors monic, square-free,
/// pairwise coprime, listed by increasing multiplicity.
std::vector<SquareFreePart> squarefree_decomposition(const Polynomial& p);
inline std::vector<SquareFreePart> squarefree_decomposition(const MonicPolynomial& p) {
  return squarefree_decomposition(p.to_polynomial());
}

/// Standard Sturm sequence p, p', -rem(...), ... Each member is rescaled by a
/// positive constant, which leaves sign variations unchanged.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Sign variations of the chain at x.
int sign_variations(std::span<const Polynomial> chain, const Rational& x);
int sign_variations_at_infinity(std::span<const Polynomial> chain, bool positive);

/// Number of distinct real roots in (lo, hi] for the square-free head of the chain.
/// Requires chain[0](lo) != 0.
int count_real_roots(std::span<const Polynomial> chain, const Rational& lo, const Rational& hi);
int count_real_roots(std::span<const Polynomial> chain);

/// 1 + max |a_i / a_n|: every root has absolute value strictly below it.
Rational cauchy_bound(const Polynomial& p);

/// Either the exact root (lo == hi) or an open interval (lo, hi) holding one root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// One interval per real root of a square-free p, ordered left to right and
/// pairwise disjoint. Rational roots are returned as exact points.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);

/// Bisects a single-root open interval until hi - lo <= width (or the root is hit).
IsolatingInterval refine_interval(const Polynomial& p, IsolatingInterval iv, const Rational& width);

/// Real roots of p with multiplicity, ordered along the real line.
struct RealRootInfo {
  IsolatingInterval where;
  int multiplicity;
  std::size_t factor;  ///< index into the square-free decomposition
};
std::vector<RealRootInfo> ordered_real_roots(const Polynomial& p);

MultiplicityVector multiplicity_vector(const MonicPolynomial& p);

/// Determinant of the Sylvester matrix; throws DomainError for a zero input.
Rational resultant(const Polynomial& p, const Polynomial& q);

/// prod (x - y_j)^{r_j} * prod (x^2 - 2 alpha_k x + alpha_k^2 + beta_k^2).
MonicPolynomial expand_from_roots(const ExactRootConfiguration& cfg);

/// Exact determinant by fraction-carrying Gaussian elimination (row-major, square).
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace strata::polycore
