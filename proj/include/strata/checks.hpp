#pragma once

// Numerical checks of the graph/transversality properties of strata at
// sampled points, plus seeded boundary-approach paths for limit probes.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "strata/geomkit.hpp"

namespace strata::checks {

using geomkit::ConfigPath;
using geomkit::Matrix;
using geomkit::SampleBox;
using geomkit::StratumPoint;
using stratlat::Stratum;

struct Tolerances {
  Real rank = 1e-9L;      ///< scaled sigma_min of the parameter -> power-sum Jacobian
  Real partials = 1e-6L;  ///< relative error of the cofactor formula against finite differences
  Real margin = 1e-8L;    ///< transversality margin
  Real newton = 1e-12L;   ///< a vs newton_b_to_a(b), relative to the coefficient scale
  Real fd_step = 1e-3L;
};

/// Smallest singular value of d(b_1..b_{n-r})/d params in the real chart after
/// dividing row j by j and normalizing every column.
Real scaled_rank_margin(const RootConfiguration& cfg);

/// db_k/db_u along the stratum by central differences (4-point stencil): for
/// each u the parameters are moved by Newton iteration so that b_u shifts by
/// +-h_u, +-2h_u with the other b_1..b_{n-r} fixed, where h_u moves the
/// parameters by about h / 5. r x (n - r).
Matrix finite_difference_partials(const RootConfiguration& cfg, Real h = 1e-3L);

/// max over (k, u) of |formula - fd| / max(1, |fd|).
Real partials_error(const RootConfiguration& cfg, Real h = 1e-3L);

/// Max entrywise gap between graph_gradient_a and the graph gradient obtained
/// from the b-chart partials through the Newton chain rule.
Real chart_consistency_error(const RootConfiguration& cfg);

struct CheckResult {
  std::string check;  ///< rank, partials, margin, newton, chart
  bool pass = false;
  double value = 0;   ///< the measured quantity compared against the tolerance
};

struct PointReport {
  StratumPoint point;
  std::vector<CheckResult> results;
  bool pass() const;
};

PointReport check_point(const StratumPoint& point, const Tolerances& tol = {});

struct StratumSummary {
  Stratum stratum;
  int samples = 0;
  int failures = 0;
  double min_rank = 0;
  double min_margin = 0;
  double max_partials_error = 0;  ///< 0 when the stratum has surplus 0
};

/// Checks `samples` points of every stratum of degree n, seeds seed, seed+1, ...
std::vector<StratumSummary> verify_theorem(int n, std::uint64_t seed, int samples, const Tolerances& tol = {},
                                           const SampleBox& box = {});

/// A path eps -> configuration whose limit as eps -> 0 is `limit`.
struct BoundaryPath {
  std::string kind;  ///< real-collision, pair-to-double, pair-collision, sheet-1, sheet-2
  StratumPoint limit;
  ConfigPath path;
};

/// Roots y_i - (m-j) eps / m and y_i + j eps / m replace the root y_i of multiplicity m.
BoundaryPath real_collision_path(const StratumPoint& limit, int i, int j);
/// The double root y_i opens into the pair y_i +- i eps.
BoundaryPath pair_to_double_path(const StratumPoint& limit, int i);
/// Pair k approaches pair l along (0.6, 0.8) eps.
BoundaryPath pair_collision_path(const RootConfiguration& limit, int k, int l);
/// Degree 4, stratum [2] near the point with double roots t < s: sheet 1 keeps
/// the double root at t and opens s into a pair; sheet 2 the other way round.
BoundaryPath two_sheet_path(Real t, Real s, int sheet);

/// `count` seeded paths cycling through the collision kinds above, all with
/// degree <= 6 and a source stratum of positive surplus.
std::vector<BoundaryPath> boundary_paths(int count, std::uint64_t seed);

nlohmann::json to_json(const PointReport& report);
nlohmann::json to_json(const StratumSummary& summary);

}  // namespace strata::checks
