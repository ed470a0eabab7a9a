#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "strata/geomkit.hpp"

using namespace strata;
using namespace strata::geomkit;
using strata::testgen::Gen;

namespace {

RootConfiguration cfg_of(std::vector<RealRoot<Real>> roots, std::vector<ComplexPair<Real>> pairs = {}) {
  RootConfiguration c;
  c.real_roots = std::move(roots);
  c.complex_pairs = std::move(pairs);
  return c;
}

Real uniform(Gen& g, Real lo, Real hi) {
  return lo + (hi - lo) * static_cast<Real>(g.integer(0, 1 << 20)) / static_cast<Real>(1 << 20);
}

}  // namespace

TEST_CASE("Vieta and power-sum oracles") {
  auto a = vieta_coeffs(cfg_of({{-1, 1}, {1, 2}}));  // (x+1)(x-1)^2 = x^3 - x^2 - x + 1
  REQUIRE(a.size() == 3);
  CHECK(a[0] == doctest::Approx(-1));
  CHECK(a[1] == doctest::Approx(-1));
  CHECK(a[2] == doctest::Approx(1));
  auto b = power_sums(cfg_of({}, {{0, 1}}), 4);  // +-i
  CHECK(static_cast<double>(b[0]) == doctest::Approx(0));
  CHECK(static_cast<double>(b[1]) == doctest::Approx(-2));
  CHECK(static_cast<double>(b[2]) == doctest::Approx(0));
  CHECK(static_cast<double>(b[3]) == doctest::Approx(2));
}

TEST_CASE("property: Newton identities invert each other and agree with power sums") {
  Gen g(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = g.stratum(8);
    auto exact = g.exact_config(s);
    RootConfiguration c;
    for (const auto& r : exact.real_roots) c.real_roots.push_back({to_real(r.y), r.mult});
    for (const auto& p : exact.complex_pairs) c.complex_pairs.push_back({to_real(p.alpha), to_real(p.beta)});
    auto a = vieta_coeffs(c);
    auto b = power_sums(c, s.degree);
    auto b2 = newton_a_to_b<Real>(a);
    auto a2 = newton_b_to_a<Real>(b);
    Real scale = 1;
    for (Real v : b) scale = std::max(scale, std::fabs(v));
    for (int k = 0; k < s.degree; ++k) {
      CHECK(std::fabs(b2[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k)]) <= 1e-12L * scale);
      CHECK(std::fabs(a2[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(k)]) <= 1e-12L * scale);
    }
  }
}

TEST_CASE("Jacobian oracle on [2,1]") {
  const Real u = -0.5L, v = 1.25L;
  auto rep = jacobian(cfg_of({{u, 2}, {v, 1}}), Chart::RealParameters);
  REQUIRE(rep.matrix.rows() == 2);
  REQUIRE(rep.matrix.cols() == 2);
  CHECK(static_cast<double>(rep.matrix(0, 0).real()) == doctest::Approx(2));
  CHECK(static_cast<double>(rep.matrix(0, 1).real()) == doctest::Approx(1));
  CHECK(static_cast<double>(rep.matrix(1, 0).real()) == doctest::Approx(4 * u));
  CHECK(static_cast<double>(rep.matrix(1, 1).real()) == doctest::Approx(2 * v));
}

TEST_CASE("property: graph partials on [2,1] match the closed form") {
  // b3 = 2u^3 + v^3 over (b1, b2) = (2u + v, 2u^2 + v^2):
  // db3/db1 = -3uv, db3/db2 = 3(u + v)/2.
  Gen g(32);
  for (int trial = 0; trial < 100; ++trial) {
    Real u = uniform(g, -2, 2), v = uniform(g, -2, 2);
    if (std::fabs(u - v) < 0.05L) continue;
    auto c = cfg_of({{std::min(u, v), u < v ? 2 : 1}, {std::max(u, v), u < v ? 1 : 2}});
    CHECK(static_cast<double>(graph_partial(c, 3, 1)) == doctest::Approx(static_cast<double>(-3 * u * v)).epsilon(1e-9));
    CHECK(static_cast<double>(graph_partial(c, 3, 2)) == doctest::Approx(static_cast<double>(1.5L * (u + v))).epsilon(1e-9));
  }
}

TEST_CASE("property: cofactor formula is real and matches the public partials") {
  Gen g(33);
  for (int trial = 0; trial < 60; ++trial) {
    auto s = g.stratum(6);
    if (s.codimension() == 0) continue;
    auto p = sample_stratum(s, static_cast<std::uint64_t>(trial));
    for (int k = s.dimension() + 1; k <= s.degree; ++k)
      for (int u = 1; u <= s.dimension(); ++u) {
        Complex f = graph_partial_formula(p.config, k, u);
        Real gp = graph_partial(p.config, k, u);
        CHECK(std::fabs(f.imag()) <= 1e-9L * std::max<Real>(1, std::abs(f)));
        CHECK(std::fabs(f.real() - gp) <= 1e-9L * std::max<Real>(1, std::fabs(gp)));
      }
  }
}

TEST_CASE("collision limit of [2,1] at a triple root") {
  const Real t = 0.7L;
  ConfigPath path = [t](Real eps) { return cfg_of({{t - eps / 3, 2}, {t + 2 * eps / 3, 1}}); };
  auto rep = boundary_limit_probe(path, {{3, 1}, {3, 2}});
  REQUIRE(rep.converged);
  REQUIRE(rep.series.size() == 2);
  CHECK(static_cast<double>(rep.series[0].limit.value) == doctest::Approx(static_cast<double>(-3 * t * t)).epsilon(1e-6));
  CHECK(static_cast<double>(rep.series[1].limit.value) == doctest::Approx(static_cast<double>(3 * t)).epsilon(1e-6));
}

TEST_CASE("Richardson extrapolation and Cauchy detection") {
  std::vector<Real> vals;
  for (int m = 0; m < 8; ++m) {
    Real e = 0.1L * std::pow(0.5L, m);
    vals.push_back(1 + 2 * e + 3 * e * e);
  }
  auto ex = richardson(vals);
  CHECK(static_cast<double>(ex.value) == doctest::Approx(1).epsilon(1e-12));
  CHECK(is_cauchy(vals, 1e-15L));
  std::vector<Real> wild{1, -1, 1, -1, 1, -1};
  CHECK_FALSE(is_cauchy(wild, 1e-15L));
}

TEST_CASE("split into real and non-real parts") {
  auto sr = split_real_complex(polycore::MonicPolynomial::parse("1,-2,1,-2"));  // (x^2 + 1)(x - 2)
  REQUIRE(sr.exact);
  CHECK(sr.Q == polycore::Polynomial{1, 0, 1});
  CHECK(sr.R == polycore::Polynomial{-2, 1});
  CHECK(sr.resultant == 5);
  CHECK(sr.certified());
}

TEST_CASE("symbolic cofactor cancellation") {
  const std::vector<int> real_real{2, 1, 1};
  for (int u = 1; u <= 3; ++u) {
    auto r = cofactor_cancellation(real_real, 1, 2, u);
    CHECK(r.combination_zero);
  }
  const std::vector<int> generic{1, 1, 1, 1};
  CHECK(cofactor_cancellation(generic, 1, 3, 2).combination_zero);
  CHECK_THROWS_AS(cofactor_cancellation(generic, 1, 1, 2), DomainError);
}

TEST_CASE("property: sampling is seeded, valid and transversal") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : stratlat::enumerate_mvs(n)) {
      auto p = sample_stratum(s, 7);
      auto q = sample_stratum(s, 7);
      CHECK(p.a == q.a);
      CHECK(p.config.mv() == s.mv);
      SampleBox box;
      for (std::size_t i = 1; i < p.config.real_roots.size(); ++i)
        CHECK(p.config.real_roots[i].y - p.config.real_roots[i - 1].y >= box.min_separation * (1 - 1e-12L));
      auto f = tangent_frame(p);
      CHECK(f.basis.rows() == n);
      CHECK(f.basis.cols() == s.dimension());
      CHECK(f.margin > 1e-8L);
      CHECK_FALSE(f.rank_deficient);
      auto back = point_from_json(to_json(p));
      CHECK(back.stratum == s);
    }
  }
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(make_point(cfg_of({{1, 1}, {0, 1}})), DomainError);
  CHECK_THROWS_AS(make_point(cfg_of({{0, 0}})), DomainError);
  CHECK_THROWS_AS(make_point(cfg_of({}, {{0, 0}})), DomainError);
  CHECK(has_coincident_pairs(cfg_of({}, {{0, 1}, {0, 1}})));
}
