#pragma once

// Mesh data for the discriminant surface of x^4 + a_2 x^2 + a_3 x + a_4 (the
// a_1 = 0 slice), parameterized by a double root t:
//   real branch     (x - t)^2 ((x + t)^2 - s^2),  s >= 0
//   complex branch  (x - t)^2 ((x + t)^2 + s^2),  s > 0
//   OD curve        (x^2 + b^2)^2,                b > 0
// Every point has rational parameters, so its MV and Res(P, P') are exact.

#include <string>
#include <vector>

#include <json.hpp>

#include "strata/mv.hpp"
#include "strata/polycore.hpp"
#include "strata/rational.hpp"

namespace strata::swallowtail {

enum class Branch { Real, Complex, DoublePair };
std::string to_string(Branch b);

struct MeshPoint {
  Branch branch = Branch::Real;
  Rational t;  ///< double root (OD curve: unused, 0)
  Rational s;  ///< half-distance of the other real roots, imaginary part, or b on OD
  Rational a2, a3, a4;
  std::string region;             ///< S, AO, BO, CO, O, OD, ABO, ACO, BCO
  MultiplicityVector mv;          ///< computed exactly from the coefficients
  MultiplicityVector expected;    ///< implied by the region
  bool on_discriminant = false;   ///< Res(P, P') == 0, exactly

  polycore::MonicPolynomial polynomial() const;
};

/// Region of a parameter point and the MV it implies.
std::string region_of(Branch branch, const Rational& t, const Rational& s);
MultiplicityVector region_mv(const std::string& region);

MeshPoint make_mesh_point(Branch branch, const Rational& t, const Rational& s);

/// t on res points of [-1, 1], s on res points of [0, 2] for both branches,
/// the triple-root lines s = 2|t|, and res - 1 points of the OD curve.
/// Throws DomainError for res < 2.
std::vector<MeshPoint> mesh(int resolution);

std::string to_csv(const std::vector<MeshPoint>& points);
nlohmann::json to_json(const std::vector<MeshPoint>& points);

}  // namespace strata::swallowtail
