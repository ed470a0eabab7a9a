#include "strata/swallowtail.hpp"

#include <iomanip>
#include <set>
#include <sstream>
#include <tuple>

namespace strata::swallowtail {

using polycore::MonicPolynomial;
using polycore::Polynomial;

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Real: return "real";
    case Branch::Complex: return "complex";
    case Branch::DoublePair: return "double-pair";
  }
  return "?";
}

std::string region_of(Branch branch, const Rational& t, const Rational& s) {
  if (branch == Branch::DoublePair) return s == 0 ? "O" : "OD";
  if (s == 0) return t == 0 ? "O" : "AO";
  if (branch == Branch::Complex) return "S";
  // Roots t (double), -t - s, -t + s.
  if (t == 0) return "BCO";
  if (s == 2 * t) return "CO";
  if (s == -2 * t) return "BO";
  if (s < -2 * t) return "ABO";
  if (s < 2 * t) return "ACO";
  return "BCO";
}

MultiplicityVector region_mv(const std::string& region) {
  if (region == "S") return MultiplicityVector({2});
  if (region == "AO") return MultiplicityVector({2, 2});
  if (region == "BO") return MultiplicityVector({3, 1});
  if (region == "CO") return MultiplicityVector({1, 3});
  if (region == "O") return MultiplicityVector({4});
  if (region == "OD") return MultiplicityVector(std::vector<int>{});
  if (region == "ABO") return MultiplicityVector({2, 1, 1});
  if (region == "ACO") return MultiplicityVector({1, 1, 2});
  if (region == "BCO") return MultiplicityVector({1, 2, 1});
  throw DomainError("unknown swallowtail region '" + region + "'");
}

MonicPolynomial MeshPoint::polynomial() const { return MonicPolynomial({Rational(0), a2, a3, a4}); }

MeshPoint make_mesh_point(Branch branch, const Rational& t, const Rational& s) {
  if (s < 0) throw DomainError("swallowtail parameter s must be >= 0");
  Polynomial p;
  if (branch == Branch::DoublePair) {
    Polynomial q{s * s, Rational(0), Rational(1)};
    p = q * q;
  } else {
    const Rational sign = branch == Branch::Real ? -1 : 1;
    Polynomial q{t * t + sign * s * s, 2 * t, Rational(1)};
    Polynomial d = Polynomial::linear(t);
    p = d * d * q;
  }
  MeshPoint m;
  m.branch = branch;
  m.t = branch == Branch::DoublePair ? Rational(0) : t;
  m.s = s;
  m.a2 = p.coeff(2);
  m.a3 = p.coeff(1);
  m.a4 = p.coeff(0);
  m.region = region_of(branch, m.t, s);
  m.expected = region_mv(m.region);
  m.mv = polycore::multiplicity_vector(m.polynomial());
  m.on_discriminant = polycore::resultant(p, polycore::derivative(p)) == 0;
  return m;
}

std::vector<MeshPoint> mesh(int resolution) {
  if (resolution < 2) throw DomainError("swallowtail resolution must be >= 2");
  const Rational step(1, resolution - 1);
  std::vector<MeshPoint> out;
  std::set<std::tuple<int, Rational, Rational>> seen;
  auto add = [&](Branch b, const Rational& t, const Rational& s) {
    if (seen.emplace(static_cast<int>(b), t, s).second) out.push_back(make_mesh_point(b, t, s));
  };
  for (int k = 0; k < resolution; ++k) {
    const Rational t = -1 + 2 * k * step;
    for (int m = 0; m < resolution; ++m) {
      const Rational s = 2 * m * step;
      add(Branch::Real, t, s);
      if (m > 0) add(Branch::Complex, t, s);
    }
    if (t != 0) add(Branch::Real, t, 2 * abs(t));
  }
  for (int k = 1; k < resolution; ++k) add(Branch::DoublePair, Rational(0), k * step);
  return out;
}

namespace {

std::string decimal(const Rational& q) {
  std::ostringstream os;
  os << std::setprecision(17) << static_cast<double>(to_real(q));
  return os.str();
}

}  // namespace

std::string to_csv(const std::vector<MeshPoint>& points) {
  std::string out = "region,branch,t,s,a2,a3,a4,mv,expected_mv,res_zero\n";
  for (const auto& p : points) {
    out += p.region + "," + to_string(p.branch) + "," + decimal(p.t) + "," + decimal(p.s) + "," + decimal(p.a2) + "," +
           decimal(p.a3) + "," + decimal(p.a4) + ",\"" + p.mv.to_string() + "\",\"" + p.expected.to_string() + "\"," +
           (p.on_discriminant ? "1" : "0") + "\n";
  }
  return out;
}

nlohmann::json to_json(const std::vector<MeshPoint>& points) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : points)
    arr.push_back({{"region", p.region},
                   {"branch", to_string(p.branch)},
                   {"t", strata::to_string(p.t)},
                   {"s", strata::to_string(p.s)},
                   {"a", {"0", strata::to_string(p.a2), strata::to_string(p.a3), strata::to_string(p.a4)}},
                   {"a_float",
                    {0.0, static_cast<double>(to_real(p.a2)), static_cast<double>(to_real(p.a3)),
                     static_cast<double>(to_real(p.a4))}},
                   {"mv", p.mv.vec()},
                   {"expected_mv", p.expected.vec()},
                   {"res_zero", p.on_discriminant}});
  return {{"slice", "a1=0"}, {"points", arr}};
}

}  // namespace strata::swallowtail
