#pragma once

// Geometry of strata in extended precision: Vieta and Newton coordinate
// changes, the multiplicity-weighted Vandermonde Jacobian of the root chart,
// the cofactor formula for the graph partials db_k/db_u, tangent frames,
// transversality margins and boundary-limit probes.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "strata/polycore.hpp"
#include "strata/roots.hpp"
#include "strata/stratlat.hpp"

namespace strata::geomkit {

using Complex = std::complex<Real>;
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using stratlat::Stratum;

/// Sampling region for root configurations.
struct SampleBox {
  Real lo = -2;
  Real hi = 2;
  Real min_separation = 0.2L;  ///< between real roots, and between pairs in C
  Real beta_min = 0.2L;
  Real beta_max = 2;
};

struct StratumPoint {
  Stratum stratum;
  RootConfiguration config;
  std::vector<Real> a;  ///< a_1 .. a_n
  std::vector<Real> b;  ///< b_1 .. b_n
};

/// Coefficients a_1..a_n of prod (x - y_j)^{r_j} prod (x^2 - 2 alpha x + alpha^2 + beta^2).
std::vector<Real> vieta_coeffs(const RootConfiguration& cfg);

/// b_i = sum_j r_j y_j^i + sum_k 2 Re((alpha_k + i beta_k)^i), i = 1..upto.
std::vector<Real> power_sums(const RootConfiguration& cfg, int upto);

/// Newton identities b_j + a_1 b_{j-1} + ... + a_{j-1} b_1 + j a_j = 0 (a_j = 0 for j > n).
/// Returns b_1..b_upto (upto defaults to n).
template <class T>
std::vector<T> newton_a_to_b(std::span<const T> a, int upto = -1) {
  const int n = static_cast<int>(a.size());
  if (upto < 0) upto = n;
  std::vector<T> b(static_cast<std::size_t>(upto));
  for (int j = 1; j <= upto; ++j) {
    T acc = j <= n ? T(a[static_cast<std::size_t>(j - 1)] * j) : T(0);
    for (int i = 1; i <= std::min(j - 1, n); ++i)
      acc += a[static_cast<std::size_t>(i - 1)] * b[static_cast<std::size_t>(j - i - 1)];
    b[static_cast<std::size_t>(j - 1)] = -acc;
  }
  return b;
}

template <class T>
std::vector<T> newton_b_to_a(std::span<const T> b) {
  const int n = static_cast<int>(b.size());
  std::vector<T> a(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    T acc = b[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i < j; ++i) acc += a[static_cast<std::size_t>(i - 1)] * b[static_cast<std::size_t>(j - i - 1)];
    a[static_cast<std::size_t>(j - 1)] = -acc / T(j);
  }
  return a;
}

/// Lower-triangular da/db of newton_b_to_a at b, diagonal -1/j.
Matrix newton_b_to_a_jacobian(std::span<const Real> b);

/// Validates cfg and fills a, b and the stratum.
StratumPoint make_point(RootConfiguration cfg);

/// Draws q strictly increasing positions with the minimum separation and
/// (n - l)/2 pairs, deterministic under `seed`. Throws DomainError if the box
/// cannot honour the separation.
StratumPoint sample_stratum(const Stratum& stratum, std::uint64_t seed, const SampleBox& box = {});

/// True if two complex pairs coincide exactly.
bool has_coincident_pairs(const RootConfiguration& cfg);

/// Parameter charts of a stratum.
///  - ComplexRoots: x_i are the distinct real roots (weight = multiplicity) and
///    both members alpha +- i beta of each pair (weight 1). This is the chart
///    of the cofactor formula.
///  - RealParameters: y_j then (alpha_k, beta_k); the real chart of tangent frames.
/// Column of a pair in the real chart = (x-column + conj column, i (x-column - conj column)).
enum class Chart { ComplexRoots, RealParameters };

struct JacobianReport {
  Chart chart;
  CMatrix matrix;  ///< entry (j-1, i) = db_j / d param_i, j = 1..n-r
  Complex determinant;
  std::vector<Complex> nodes;  ///< x_i (ComplexRoots chart)
  std::vector<int> weights;    ///< m_i (ComplexRoots chart)

  /// Cofactor A_{u,i} of the entry (u, i), 1-based.
  Complex cofactor(int u, int i) const;
};

JacobianReport jacobian(const RootConfiguration& cfg, Chart chart = Chart::ComplexRoots);

/// d b_j / d params in the real chart for j = 1..rows.
Matrix power_sum_jacobian(const RootConfiguration& cfg, int rows);

/// d a / d params in the real chart, n x (n - r).
Matrix parameter_tangents(const RootConfiguration& cfg);

/// k * sum_i m_i x_i^{k-1} A_{u,i} / w, evaluated literally. Requires w != 0.
Complex graph_partial_formula(const RootConfiguration& cfg, int k, int u);

/// db_k/db_u along the stratum (k > n - r, 1 <= u <= n - r). At configurations
/// with coincident pairs the value is the limit along a separating path.
Real graph_partial(const RootConfiguration& cfg, int k, int u);

/// All db_k/db_u, r x (n - r).
Matrix graph_gradient_b(const RootConfiguration& cfg);

/// da_{n-r+k}/da_u along the stratum, r x (n - r), from the parameter tangents.
Matrix graph_gradient_a(const RootConfiguration& cfg);

/// Smallest singular value of the first `dim` rows of an orthonormal basis of span(basis).
Real transversality_margin(const Matrix& basis, int dim);

struct TangentFrame {
  StratumPoint point;  ///< base point (for limit frames: the boundary point)
  Stratum source;      ///< stratum whose tangent field the frame belongs to
  Matrix basis;        ///< n x (n - r) in a-coordinates
  Matrix graph_gradient;
  Real margin = 0;
  bool extrapolated = false;
  Real limit_error = 0;  ///< Richardson error estimate for limit frames
  bool rank_deficient = false;
};

TangentFrame tangent_frame(const StratumPoint& point);

using ConfigPath = std::function<RootConfiguration(Real)>;

struct ProbeOptions {
  Real eps0 = 1e-2L;
  Real ratio = 0.5L;
  int steps = 8;  ///< at least 6
};

/// Separates the coincident pairs of cfg along eps (identity if there are none).
ConfigPath separating_path(const RootConfiguration& cfg);

/// Limit of the tangent field of the stratum of path(eps) as eps -> 0, based at
/// `limit_point`. The graph gradient is extrapolated entrywise.
TangentFrame tangent_frame_limit(const StratumPoint& limit_point, const ConfigPath& path, const ProbeOptions& opts = {});

struct Extrapolation {
  Real value = 0;
  Real error = 0;
};

/// Richardson extrapolation of f(eps_m), eps_m = eps0 * ratio^m, assuming an
/// expansion in integer powers of eps.
Extrapolation richardson(std::span<const Real> values, Real ratio = 0.5L);

/// Successive differences shrink by a factor >= `min_ratio` on (geometric)
/// average, ignoring differences below the absolute floor.
bool is_cauchy(std::span<const Real> values, Real floor, Real min_ratio = 1.5L);

struct LimitSeries {
  int k = 0;
  int u = 0;
  std::vector<Real> values;
  bool cauchy = false;
  Extrapolation limit;
};

struct BoundaryProbeReport {
  std::vector<Real> eps;
  std::vector<LimitSeries> series;
  bool converged = false;
};

/// Evaluates graph partials of the stratum of path(eps) on a geometric eps
/// ladder and extrapolates to eps = 0. An empty target list means all (k, u).
BoundaryProbeReport boundary_limit_probe(const ConfigPath& path, std::vector<std::pair<int, int>> targets = {},
                                         const ProbeOptions& opts = {});

/// P = Q R with Q collecting the non-real roots and R the real ones.
struct SplitResult {
  bool exact = false;
  polycore::Polynomial Q;  ///< valid when exact
  polycore::Polynomial R;  ///< valid when exact
  Rational resultant;      ///< Res(Q, R), valid when exact
  std::vector<Real> q_numeric;  ///< descending coefficients
  std::vector<Real> r_numeric;
  Real resultant_numeric = 0;

  bool certified() const { return exact ? resultant != 0 : resultant_numeric != 0; }
};

/// Exact whenever the real-root part has rational coefficients that the
/// square-free decomposition exposes; otherwise a numeric split.
SplitResult split_real_complex(const polycore::MonicPolynomial& p);

/// Checks m_mu A_{u,mu} + m_nu A_{u,nu} == 0 symbolically after substituting
/// x_nu = x_mu in the weighted Vandermonde Jacobian with the given weights.
/// Also reports whether the individual cofactors are nonzero polynomials.
struct CofactorIdentity {
  bool combination_zero = false;
  bool cofactors_nonzero = false;
};
CofactorIdentity cofactor_cancellation(std::span<const int> weights, int mu, int nu, int u);

nlohmann::json to_json(const StratumPoint& point);
StratumPoint point_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TangentFrame& frame);

}  // namespace strata::geomkit
