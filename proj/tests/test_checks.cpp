#include <doctest.h>

#include <cmath>
#include <complex>

#include "strata/checks.hpp"

using namespace strata;
using namespace strata::checks;
using geomkit::boundary_limit_probe;
using geomkit::make_point;

namespace {

RootConfiguration cfg_of(std::vector<RealRoot<Real>> roots, std::vector<ComplexPair<Real>> pairs = {}) {
  RootConfiguration c;
  c.real_roots = std::move(roots);
  c.complex_pairs = std::move(pairs);
  return c;
}

// db4/db_u on [2] (double root y, pair alpha +- i beta) straight from the power
// sums, with the beta column rescaled so small beta stays well conditioned.
std::array<Real, 3> stratum2_partials(Real y, Real alpha, Real beta) {
  using C = std::complex<Real>;
  const C z(alpha, beta);
  Eigen::Matrix<Real, 3, 3> J;
  Eigen::Matrix<Real, 3, 1> g;
  for (int k = 1; k <= 4; ++k) {
    Real dy = 2 * k * std::pow(y, k - 1);
    Real da = 2 * k * std::real(std::pow(z, k - 1));
    Real db = -2 * k * std::imag(std::pow(z, k - 1)) / beta;
    if (k <= 3) {
      J(k - 1, 0) = dy;
      J(k - 1, 1) = da;
      J(k - 1, 2) = db;
    } else {
      g << dy, da, db;
    }
  }
  Eigen::Matrix<Real, 3, 1> p = J.transpose().fullPivLu().solve(g);
  return {p(0), p(1), p(2)};
}

}  // namespace

TEST_CASE("tolerances are the documented defaults") {
  Tolerances tol;
  CHECK(tol.rank == 1e-9L);
  CHECK(tol.partials == 1e-6L);
  CHECK(tol.margin == 1e-8L);
}

TEST_CASE("finite differences agree with the cofactor formula on [2,1]") {
  auto c = cfg_of({{-0.5L, 2}, {1.25L, 1}});
  auto fd = finite_difference_partials(c);
  REQUIRE(fd.rows() == 1);
  REQUIRE(fd.cols() == 2);
  CHECK(static_cast<double>(fd(0, 0)) == doctest::Approx(3 * 0.5 * 1.25).epsilon(1e-8));
  CHECK(static_cast<double>(fd(0, 1)) == doctest::Approx(1.5 * 0.75).epsilon(1e-8));
  CHECK(partials_error(c) < 1e-8L);
}

TEST_CASE("property: every check passes at sampled points of degree <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : stratlat::enumerate_mvs(n))
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto rep = check_point(geomkit::sample_stratum(s, seed));
        INFO(s.to_string() << " seed " << seed);
        CHECK(rep.pass());
        CHECK(chart_consistency_error(rep.point.config) < 1e-8L);
      }
}

TEST_CASE("theorem summary over degree 4") {
  auto rows = verify_theorem(4, 1, 5);
  CHECK(rows.size() == 11);
  for (const auto& r : rows) {
    CHECK(r.samples == 5);
    CHECK(r.failures == 0);
    CHECK(r.min_rank > 1e-9);
  }
}

TEST_CASE("real collision limit at a triple root") {
  auto limit = make_point(cfg_of({{0.7L, 3}}));
  auto bp = real_collision_path(limit, 1, 2);  // [3] -> [2,1]
  auto rep = boundary_limit_probe(bp.path);
  REQUIRE(rep.converged);
  for (const auto& s : rep.series) {
    if (s.u == 1) CHECK(static_cast<double>(s.limit.value) == doctest::Approx(-3 * 0.49).epsilon(1e-6));
    if (s.u == 2) CHECK(static_cast<double>(s.limit.value) == doctest::Approx(3 * 0.7).epsilon(1e-6));
  }
}

TEST_CASE("two sheets over [2,2] have different tangent limits") {
  const Real t = -1, s = 0.5L;
  const Real beta = 1e-4L;
  auto sheet1 = stratum2_partials(t, s, beta);
  auto sheet2 = stratum2_partials(s, t, beta);
  Real gap = 0;
  for (int sheet = 1; sheet <= 2; ++sheet) {
    auto bp = two_sheet_path(t, s, sheet);
    auto rep = boundary_limit_probe(bp.path);
    REQUIRE(rep.converged);
    const auto& oracle = sheet == 1 ? sheet1 : sheet2;
    for (const auto& ser : rep.series) {
      REQUIRE(ser.k == 4);
      Real want = oracle[static_cast<std::size_t>(ser.u - 1)];
      CHECK(std::fabs(ser.limit.value - want) < 1e-6L);
    }
  }
  for (int u = 0; u < 3; ++u) gap = std::max(gap, std::fabs(sheet1[static_cast<std::size_t>(u)] - sheet2[static_cast<std::size_t>(u)]));
  CHECK(gap > 1e-3L);
}

TEST_CASE("pair collision limit exists") {
  auto bp = pair_collision_path(cfg_of({{0.3L, 2}}, {{-0.5L, 1}, {0.8L, 0.6L}}), 2, 1);
  CHECK(bp.kind == "pair-collision");
  auto rep = boundary_limit_probe(bp.path);
  CHECK(rep.converged);
}

TEST_CASE("property: seeded boundary paths converge and land on their limit") {
  auto paths = boundary_paths(20, 5);
  REQUIRE(paths.size() == 20);
  for (const auto& bp : paths) {
    INFO(bp.kind);
    auto near = bp.path(1e-9L);
    CHECK(near.degree() == bp.limit.stratum.degree);
    CHECK(near.mv().surplus() >= 1);
    auto a = geomkit::vieta_coeffs(near);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::fabs(a[k] - bp.limit.a[k]) < 1e-6L);
    CHECK(boundary_limit_probe(bp.path).converged);
  }
}

TEST_CASE("JSON reports") {
  auto rep = check_point(geomkit::sample_stratum(stratlat::validate_mv(std::vector<int>{2, 1}, 3), 0));
  auto j = to_json(rep);
  CHECK(j["checks"].size() == rep.results.size());
  CHECK(j["pass"] == true);
}
