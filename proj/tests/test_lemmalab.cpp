#include <doctest.h>

#include <cmath>

#include "strata/lemmalab.hpp"

using namespace strata;
using namespace strata::lemmalab;

namespace {

Stratum stratum(std::vector<int> parts, int n) { return stratlat::validate_mv(parts, n); }

// A = (x - 1)^2 (x + 1)^2. With a_1 = 0 and a_2 = -2 pinned, splitting the
// double root at +1 gives the roots p, p (double) and -p +- d with p^2 = 1 - d^2/2:
//   a_3 = 2 p d^2,  a_4 - 1 = -2 d^2 + 3 d^4 / 4.
// Opening it into -p +- i b instead gives p^2 = 1 + b^2/2:
//   a_3 = -2 p b^2, a_4 - 1 = 2 b^2 + 3 b^4 / 4.
// Mirroring x -> -x flips the sign of a_3.
TracedSection traced_22() {
  RootConfiguration c;
  c.real_roots = {{-1, 2}, {1, 2}};
  return trace_section(section_setup(geomkit::make_point(c)));
}

const AdjacentCurve& curve(const TracedSection& t, const std::string& label) {
  for (const auto& c : t.curves)
    if (c.label.to_string() == label) return c;
  throw std::runtime_error("no curve " + label);
}

}  // namespace

TEST_CASE("slopes and sides of the curves through (x-1)^2 (x+1)^2") {
  auto t = traced_22();
  CHECK(t.setup.s == 2);
  CHECK(t.curves.size() == 4);

  const auto& right_split = curve(t, "split(2,1)");  // [2,1,1]
  CHECK(right_split.upper == MultiplicityVector{2, 1, 1});
  CHECK(static_cast<double>(right_split.slope) == doctest::Approx(1).epsilon(1e-7));
  CHECK(right_split.side == Side::Left);

  const auto& left_split = curve(t, "split(1,1)");  // [1,1,2]
  CHECK(static_cast<double>(left_split.slope) == doctest::Approx(-1).epsilon(1e-7));
  CHECK(left_split.side == Side::Right);

  const auto& right_pair = curve(t, "delete2(2)");
  CHECK(right_pair.upper == MultiplicityVector{2});
  CHECK(static_cast<double>(right_pair.slope) == doctest::Approx(1).epsilon(1e-7));
  CHECK(right_pair.side == Side::Right);

  const auto& left_pair = curve(t, "delete2(1)");
  CHECK(static_cast<double>(left_pair.slope) == doctest::Approx(-1).epsilon(1e-7));
  CHECK(left_pair.side == Side::Left);
}

TEST_CASE("curve points follow the closed form") {
  auto t = traced_22();
  const auto& c = curve(t, "split(2,1)");
  REQUIRE(c.points.size() >= 3);
  for (const auto& pt : c.points) {
    // The traced delta is the separation 2d of the split roots.
    Real d = pt.delta / 2;
    Real p = -std::sqrt(1 - d * d / 2);
    CHECK(std::fabs(pt.d1 - 2 * p * d * d) < 1e-9L);
    CHECK(std::fabs(pt.d2 - (-2 * d * d + 0.75L * d * d * d * d)) < 1e-9L);
    CHECK(pt.residual < 1e-10L);
  }
}

TEST_CASE("section setup rejects strata of too large dimension") {
  CHECK_THROWS_AS(section_setup(stratum({1, 1}, 2), 0), DomainError);
  CHECK_THROWS_AS(section_setup(stratum({1, 1, 1}, 3), 0), DomainError);
  CHECK_NOTHROW(section_setup(stratum({3}, 3), 0));
}

TEST_CASE("scale ladder halves delta0") {
  LemmaOptions o;
  auto l = scale_ladder(o);
  REQUIRE(static_cast<int>(l.size()) == o.scales);
  CHECK(l.front() == o.delta0);
  for (std::size_t i = 1; i < l.size(); ++i) CHECK(l[i] == l[i - 1] / 2);
}

TEST_CASE("property: all claims hold for eligible strata of degree <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& s : stratlat::enumerate_mvs(n)) {
      if (s.dimension() > n - 2) continue;
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto t = trace_section(section_setup(s, seed));
        for (const auto& c : t.curves) CHECK(c.ok());
        for (const auto& name : lemma_names()) {
          auto rep = verify_lemma(name, t);
          INFO(name << " " << s.to_string() << " seed " << seed);
          for (const auto& note : rep.notes) INFO(note);
          CHECK(rep.pass);
        }
      }
    }
}

TEST_CASE("reading the root index left to right breaks the ordering claims") {
  // Every stratum with two or more distinct roots fails at least one of the
  // index-sensitive claims, while slope and uv do not depend on the order.
  LemmaOptions inc;
  inc.order = RootOrder::Increasing;
  int total = 0;
  for (int n = 3; n <= 6; ++n)
    for (const auto& s : stratlat::enumerate_mvs(n)) {
      if (s.dimension() > n - 2 || s.mv.groups() < 2) continue;
      auto t = trace_section(section_setup(s, 0), inc);
      ++total;
      INFO(s.to_string());
      CHECK(verify_lemma("slope", t, inc).pass);
      CHECK(verify_lemma("uv", t, inc).pass);
      bool all = verify_lemma("slopebis", t, inc).pass && verify_lemma("leftright", t, inc).pass &&
                 verify_lemma("updown", t, inc).pass;
      CHECK_FALSE(all);
    }
  CHECK(total == 41);
}

TEST_CASE("unknown lemma names are rejected") {
  auto t = traced_22();
  CHECK_THROWS_AS(verify_lemma("nope", t), DomainError);
}

TEST_CASE("report JSON") {
  auto t = traced_22();
  auto rep = verify_lemma("slope", t);
  auto j = to_json(rep, t);
  CHECK(j["lemma"] == "slope");
  CHECK(j["verdict"] == "PASS");
  CHECK(j["curves"].size() == 4);
}
