#include <doctest.h>

#include <algorithm>
#include <map>

#include "strata/swallowtail.hpp"

using namespace strata;
using namespace strata::swallowtail;
using polycore::Polynomial;

namespace {

// MV from the explicit real roots of the parameterization: sort, then count runs.
MultiplicityVector sorted_mv(const MeshPoint& p) {
  std::vector<Rational> roots;
  if (p.branch != Branch::DoublePair) roots = {p.t, p.t};
  if (p.branch == Branch::Real) {
    roots.push_back(-p.t - p.s);
    roots.push_back(-p.t + p.s);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<int> parts;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0 && roots[i] == roots[i - 1])
      ++parts.back();
    else
      parts.push_back(1);
  }
  return MultiplicityVector(parts);
}

}  // namespace

TEST_CASE("region tags imply the expected MVs") {
  CHECK(region_mv("S") == MultiplicityVector{2});
  CHECK(region_mv("AO") == MultiplicityVector{2, 2});
  CHECK(region_mv("BO") == MultiplicityVector{3, 1});
  CHECK(region_mv("CO") == MultiplicityVector{1, 3});
  CHECK(region_mv("O") == MultiplicityVector{4});
  CHECK(region_mv("OD") == MultiplicityVector{});
}

TEST_CASE("named points") {
  auto o = make_mesh_point(Branch::Real, 0, 0);
  CHECK(o.region == "O");
  CHECK(o.mv == MultiplicityVector{4});
  auto ao = make_mesh_point(Branch::Complex, Rational(1, 2), 0);  // s = 0 on the complex branch is the AO curve
  CHECK(ao.mv == MultiplicityVector{2, 2});
  auto od = make_mesh_point(Branch::DoublePair, 0, 1);
  CHECK(od.region == "OD");
  CHECK(od.a2 == 2);
  CHECK(od.a4 == 1);
  auto bo = make_mesh_point(Branch::Real, Rational(1, 2), 1);  // roots 1/2 (x2), -3/2, 1/2
  CHECK(bo.mv == MultiplicityVector{1, 3});
}

TEST_CASE("property: every mesh point is on the discriminant with the right MV") {
  auto pts = mesh(15);
  std::map<std::string, int> seen;
  for (const auto& p : pts) {
    INFO(to_string(p.branch) << " t=" << to_string(p.t) << " s=" << to_string(p.s));
    CHECK(p.on_discriminant);
    Polynomial P = p.polynomial().to_polynomial();
    CHECK(polycore::resultant(P, polycore::derivative(P)) == 0);
    CHECK(p.a2 == P.coeff(2));
    CHECK(P.coeff(3) == 0);
    CHECK(p.mv == p.expected);
    CHECK(p.mv == sorted_mv(p));
    CHECK(region_mv(p.region) == p.expected);
    ++seen[p.region];
  }
  for (const char* r : {"S", "AO", "BO", "CO", "O", "OD"}) CHECK(seen[r] > 0);
}

TEST_CASE("mesh size and validation") {
  CHECK_THROWS_AS(mesh(1), DomainError);
  auto a = mesh(5);
  auto b = mesh(5);
  CHECK(a.size() == b.size());
  auto csv = to_csv(a);
  CHECK(csv.rfind("region,branch,t,s,a2,a3,a4,mv,expected_mv,res_zero\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == a.size() + 1);
  CHECK(to_json(a)["points"].size() == a.size());
}
