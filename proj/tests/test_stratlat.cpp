#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gen.hpp"
#include "strata/stratlat.hpp"

using namespace strata;
using namespace strata::stratlat;
using Parts = std::vector<int>;

namespace {

std::set<MultiplicityVector> uppers(const MultiplicityVector& mv, int n) {
  std::set<MultiplicityVector> out;
  for (const auto& c : upward_neighbors(validate_mv(mv, n))) out.insert(c.upper.mv);
  return out;
}

// Brute force count: compositions of l number 2^(l-1) for l >= 1, one for l = 0.
std::size_t brute_count(int n) {
  std::size_t total = 0;
  for (int l = n % 2; l <= n; l += 2) total += l == 0 ? 1 : (std::size_t{1} << (l - 1));
  return total;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate_mv(Parts{2, 2}, 4).dimension() == 2);
  CHECK(validate_mv(Parts{}, 4).codimension() == 0);
  CHECK(validate_mv(Parts{1, 1}, 4).complex_pairs() == 1);
  CHECK_THROWS_AS(validate_mv(Parts{0, 2}, 4), InvalidStratum);
  CHECK_THROWS_AS(validate_mv(Parts{3, 2}, 4), InvalidStratum);
  CHECK_THROWS_AS(validate_mv(Parts{1, 2}, 4), InvalidStratum);
  CHECK_THROWS_AS(validate_mv(Parts{1}, 0), InvalidStratum);
  try {
    validate_mv(Parts{1, 2}, 4);
  } catch (const InvalidStratum& e) {
    CHECK(e.kind() == InvalidStratum::Kind::Parity);
  }
}

TEST_CASE("degree 4 has eleven strata") {
  CHECK(enumerate_mvs(4).size() == 11);
  CHECK(stratum_count(4) == 11);
  for (int n = 1; n <= 12; ++n) CHECK(stratum_count(n) == brute_count(n));
}

TEST_CASE("enumeration order is length first then lexicographic") {
  auto all = enumerate_mvs(4);
  CHECK(all.front().mv == MultiplicityVector{1, 1, 1, 1});
  CHECK(all.back().mv == MultiplicityVector{});
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(enumeration_less(all[i - 1].mv, all[i].mv));
}

TEST_CASE("known adjacencies at degree 4") {
  CHECK(uppers({4}, 4) == std::set<MultiplicityVector>{{3, 1}, {1, 3}, {2, 2}});
  CHECK(uppers({2, 2}, 4) == std::set<MultiplicityVector>{{2, 1, 1}, {1, 1, 2}, {2}});
  CHECK(uppers({1, 1, 1, 1}, 4).empty());
  CHECK(uppers({}, 4).empty());
}

TEST_CASE("type A and type B operations") {
  auto merges = type_a_merges({1, 2, 1});
  std::set<MultiplicityVector> got(merges.begin(), merges.end());
  CHECK(got == std::set<MultiplicityVector>{{3, 1}, {1, 3}, {4}});
  auto b = type_b_results({1}, 3);
  std::set<MultiplicityVector> gotb(b.begin(), b.end());
  CHECK(gotb == std::set<MultiplicityVector>{{2, 1}, {1, 2}, {3}});
  CHECK_THROWS_AS(type_b_results({1, 1}, 2), DomainError);
}

TEST_CASE("cover labels") {
  CHECK(apply({3, 1}, {CoverLabel::Kind::Split, 1, 1}) == MultiplicityVector{1, 2, 1});
  CHECK(apply({2, 1}, {CoverLabel::Kind::Delete2, 1}) == MultiplicityVector{1});
  CHECK_THROWS_AS(apply({3}, {CoverLabel::Kind::Delete2, 1}), DomainError);
  CHECK(CoverLabel::parse("split(2,1)") == CoverLabel{CoverLabel::Kind::Split, 2, 1});
  CHECK(CoverLabel::parse("delete2(3)").to_string() == "delete2(3)");
}

TEST_CASE("property: covers raise dimension by one and lie in the closure") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& c : build_poset(n).covers) {
      CHECK(c.upper.dimension() == c.lower.dimension() + 1);
      CHECK(in_closure(c.lower, c.upper));
      CHECK_FALSE(in_closure(c.upper, c.lower));
      for (const auto& l : c.labels) CHECK(apply(c.lower.mv, l) == c.upper.mv);
    }
  }
}

TEST_CASE("property: closure is a partial order graded by dimension") {
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_mvs(n);
    for (const auto& a : all) {
      CHECK(in_closure(a, a));
      for (const auto& b : all) {
        if (&a != &b && in_closure(a, b)) {
          CHECK(a.dimension() < b.dimension());
          CHECK_FALSE(in_closure(b, a));
          for (const auto& c : all)
            if (in_closure(b, c)) CHECK(in_closure(a, c));
        }
      }
    }
  }
}

TEST_CASE("property: random MVs round-trip through text") {
  strata::testgen::Gen g(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = g.stratum(10);
    CHECK(MultiplicityVector::parse(s.mv.to_string()) == s.mv);
  }
  CHECK(MultiplicityVector::parse(" 3, 1 ") == MultiplicityVector{3, 1});
  CHECK_THROWS_AS(MultiplicityVector::parse("[3,x]"), ParseError);
}

TEST_CASE("poset exports") {
  auto p = build_poset(4);
  auto j = to_json(p);
  CHECK(j["nodes"].size() == 11);
  auto dot = to_dot(p);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("[2,2]") != std::string::npos);
}
