#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "strata/polycore.hpp"

using namespace strata;
using namespace strata::polycore;
using strata::testgen::Gen;

namespace {

Polynomial P(std::initializer_list<int> ascending) {
  std::vector<Rational> c;
  for (int v : ascending) c.emplace_back(v);
  return Polynomial(c);
}

MultiplicityVector mv_of(const std::string& text) { return multiplicity_vector(MonicPolynomial::parse(text)); }

// Product of (x - root) factors.
Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) p = p * Polynomial::linear(r);
  return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" -7 ")) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(exact_rational(0.375L) == Rational(3, 8));
}

TEST_CASE("arithmetic oracles") {
  Polynomial x2m1 = P({-1, 0, 1});
  CHECK(x2m1 == P({-1, 1}) * P({1, 1}));
  auto [q, r] = divmod(P({1, 0, 0, 1}), P({1, 1}));  // x^3 + 1 = (x + 1)(x^2 - x + 1)
  CHECK(q == P({1, -1, 1}));
  CHECK(r.is_zero());
  CHECK(derivative(P({5, 3, 0, 2})) == P({3, 0, 6}));
  CHECK_THROWS_AS(divmod(x2m1, Polynomial()), DomainError);
  CHECK_THROWS_AS(exact_div(x2m1, P({2, 1})), DomainError);
}

TEST_CASE("gcd oracles") {
  // gcd((x-1)^2 (x+2), (x-1)(x+3)) = x - 1
  Polynomial a = pow(P({-1, 1}), 2) * P({2, 1});
  Polynomial b = P({-1, 1}) * P({3, 1});
  CHECK(gcd(a, b) == P({-1, 1}));
  CHECK(gcd(P({1, 1}), P({-1, 1})) == P({1}));
  CHECK(gcd(Polynomial(), P({4, 2})) == P({2, 1}));
  CHECK_THROWS_AS(gcd(Polynomial(), Polynomial()), DomainError);
}

TEST_CASE("resultant oracles") {
  CHECK(resultant(P({-1, 1}), P({1, 1})) == 2);
  CHECK(resultant(P({1, 0, 1}), P({1, -2, 1})) == 4);
  CHECK(resultant(P({-1, 1}), P({-1, 1})) == 0);
  // Res(x^2 + p x + q, 2x + p) = 4q - p^2 for the monic quadratic
  CHECK(resultant(P({3, 1, 1}), P({1, 2})) == 11);
  CHECK_THROWS_AS(resultant(Polynomial(), P({1, 1})), DomainError);
}

TEST_CASE("MV oracles") {
  CHECK(mv_of("1,0,-2,0,1") == MultiplicityVector{2, 2});
  CHECK(mv_of("1,0,1") == MultiplicityVector{});
  CHECK(mv_of("1,-3,3,-1") == MultiplicityVector{3});
  CHECK(mv_of("1,1,0,0") == MultiplicityVector{1, 2});  // x^2 (x + 1): root -1 first
  CHECK(mv_of("1,-1,0,0") == MultiplicityVector{2, 1});
  CHECK(mv_of("1,0,-2") == MultiplicityVector{1, 1});  // irrational roots
  CHECK_THROWS_AS(MonicPolynomial::parse("2,1"), ParseError);
  CHECK_THROWS_AS(MonicPolynomial::parse("1,,1"), ParseError);
}

TEST_CASE("Sturm counts match known roots") {
  Polynomial p = from_roots({Rational(-3), Rational(1, 2), Rational(5, 3)});
  auto chain = sturm_chain(p);
  CHECK(count_real_roots(chain) == 3);
  CHECK(count_real_roots(chain, Rational(0), Rational(2)) == 2);
  CHECK(count_real_roots(sturm_chain(P({1, 0, 1}))) == 0);
}

TEST_CASE("property: Yun decomposition reassembles and is square-free") {
  Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = Polynomial::constant(1);
    const int factors = g.integer(1, 4);
    for (int f = 0; f < factors; ++f) p = p * pow(Polynomial::linear(g.rational(9, 4)), static_cast<unsigned>(g.integer(1, 3)));
    if (g.coin()) p = p * P({g.integer(1, 5), 0, 1});
    auto parts = squarefree_decomposition(p);
    Polynomial back = Polynomial::constant(1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      back = back * pow(parts[i].factor, static_cast<unsigned>(parts[i].multiplicity));
      CHECK(gcd(parts[i].factor, derivative(parts[i].factor)).degree() == 0);
      if (i > 0) CHECK(parts[i - 1].multiplicity < parts[i].multiplicity);
    }
    CHECK(back == p.monic());
  }
}

TEST_CASE("property: gcd divides both arguments and is a common multiple of known factors") {
  Gen g(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> common, ra, rb;
    for (int k = g.integer(0, 2); k > 0; --k) common.push_back(g.rational(6, 3));
    for (int k = g.integer(0, 3); k > 0; --k) ra.push_back(g.rational(6, 3) + 100);
    for (int k = g.integer(0, 3); k > 0; --k) rb.push_back(g.rational(6, 3) - 100);
    Polynomial c = from_roots(common);
    Polynomial a = c * from_roots(ra);
    Polynomial b = c * from_roots(rb);
    Polynomial d = gcd(a, b);
    CHECK(divmod(a, d).second.is_zero());
    CHECK(divmod(b, d).second.is_zero());
    CHECK(d == c);
  }
}

TEST_CASE("property: resultant equals the product formula over known roots") {
  Gen g(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> ra, rb;
    for (int k = g.integer(1, 4); k > 0; --k) ra.push_back(g.rational(9, 4));
    for (int k = g.integer(1, 4); k > 0; --k) rb.push_back(g.rational(9, 4));
    Rational expect = 1;
    for (const auto& x : ra)
      for (const auto& y : rb) expect *= x - y;
    CHECK(resultant(from_roots(ra), from_roots(rb)) == expect);
  }
}

TEST_CASE("property: isolating intervals are disjoint, ordered and each holds one root") {
  Gen g(14);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> roots;
    while (static_cast<int>(roots.size()) < g.integer(1, 6)) {
      Rational y = g.rational(20, 6);
      if (std::find(roots.begin(), roots.end(), y) == roots.end()) roots.push_back(y);
    }
    Polynomial p = from_roots(roots) * P({2, 0, 1});  // x^2 + 2 adds no real roots
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == roots.size());
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      if (ivs[i].exact()) {
        CHECK(ivs[i].lo == roots[i]);
      } else {
        CHECK(ivs[i].lo < roots[i]);
        CHECK(roots[i] < ivs[i].hi);
      }
      if (i > 0) CHECK(ivs[i - 1].hi <= ivs[i].lo);
    }
  }
}

TEST_CASE("property: expand_from_roots then multiplicity_vector is the identity on MVs") {
  Gen g(15);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = g.stratum(8);
    auto cfg = g.exact_config(s);
    CHECK(multiplicity_vector(expand_from_roots(cfg)) == s.mv);
  }
}

TEST_CASE("exact determinant") {
  std::vector<std::vector<Rational>> m{{Rational(2), Rational(1)}, {Rational(4), Rational(3)}};
  CHECK(determinant(m) == 2);
  std::vector<std::vector<Rational>> singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(determinant(singular) == 0);
}
