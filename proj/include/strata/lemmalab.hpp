#pragma once

// Numerical harness for the local picture at a point A of a stratum U of
// dimension s <= n - 2: the adjacent (s+1)-dimensional strata, restricted to
// a_1..a_s = A_1..A_s, are curves through A; their projections to the
// (a_{s+1}, a_{s+2}) plane are traced, and slope / side / above-below claims
// about them are checked.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "strata/geomkit.hpp"
#include "strata/stratlat.hpp"

namespace strata::lemmalab {

using geomkit::Matrix;
using geomkit::SampleBox;
using geomkit::StratumPoint;
using stratlat::CoverLabel;
using stratlat::Stratum;

/// How the root index i (and the split part j) in the lemma statements is
/// read against the increasing list of real roots. Decreasing: i = 1 is the
/// largest real root and U_{i,j} has the part j on the side of larger roots.
enum class RootOrder { Increasing, Decreasing };

struct LemmaOptions {
  Real tol_eq = 1e-6L;   ///< relative slope equality
  Real tol_neq = 1e-6L;  ///< absolute separation for strict inequalities
  Real delta0 = 0.05L;   ///< largest separation of the perturbed roots
  int scales = 8;        ///< halvings of delta0
  int offsets = 5;       ///< common offsets (ratio 1/4) for above/below checks
  RootOrder order = RootOrder::Decreasing;
  SampleBox box;
};

struct SectionSetup {
  Stratum stratum;
  StratumPoint base;  ///< the point A
  int s = 0;          ///< dim U; a_1..a_s are pinned, the section plane is (a_{s+1}, a_{s+2})
  std::uint64_t seed = 0;
};

/// Throws DomainError if dim U > n - 2.
SectionSetup section_setup(const Stratum& stratum, std::uint64_t seed, const SampleBox& box = {});
SectionSetup section_setup(const StratumPoint& base, std::uint64_t seed = 0);

struct CurvePoint {
  Real delta = 0;  ///< separation of the split roots, or imaginary part of the new pair
  Real d1 = 0;     ///< a_{s+1} - A_{s+1}
  Real d2 = 0;     ///< a_{s+2} - A_{s+2}
  Real residual = 0;  ///< max_{u <= s} |a_u - A_u|
  RootConfiguration config;
};

enum class Side { Left = -1, Mixed = 0, Right = 1 };
std::string to_string(Side side);

struct AdjacentCurve {
  CoverLabel label;
  MultiplicityVector upper;
  std::vector<CurvePoint> points;
  Real slope = 0;        ///< extrapolated lim d2 / d1
  Real slope_error = 0;  ///< Richardson error estimate
  bool slope_cauchy = false;
  Side side = Side::Mixed;
  std::vector<std::string> diagnostics;

  bool ok() const { return points.size() >= 3 && side != Side::Mixed; }
};

std::vector<Real> scale_ladder(const LemmaOptions& opts);

/// Traces the curve of the upper stratum given by `label` through A. At each
/// scale the perturbed configuration is corrected by damped Newton iteration
/// so that a_1..a_s match A; scales where Newton fails are dropped.
/// Throws DomainError if every scale fails.
AdjacentCurve trace_adjacent_curve(const SectionSetup& setup, const CoverLabel& label, std::span<const Real> scales);

/// Point of the curve with a_{s+1} - A_{s+1} = offset, if Newton converges.
std::optional<CurvePoint> solve_at_offset(const SectionSetup& setup, const AdjacentCurve& curve, Real offset);

struct TracedSection {
  SectionSetup setup;
  std::vector<AdjacentCurve> curves;  ///< one per label of every upward cover
};

TracedSection trace_section(const SectionSetup& setup, const LemmaOptions& opts = {});

struct LemmaReport {
  std::string lemma;
  bool pass = false;
  bool vacuous = false;
  std::map<std::string, double> margins;
  std::vector<std::string> notes;
};

LemmaReport verify_lemma_slope(const TracedSection& t, const LemmaOptions& opts = {});
LemmaReport verify_lemma_uv(const TracedSection& t, const LemmaOptions& opts = {});
LemmaReport verify_lemma_slopebis(const TracedSection& t, const LemmaOptions& opts = {});
LemmaReport verify_lemma_leftright(const TracedSection& t, const LemmaOptions& opts = {});
LemmaReport verify_lemma_updown(const TracedSection& t, const LemmaOptions& opts = {});

inline const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"slope", "uv", "slopebis", "leftright", "updown"};
  return names;
}

/// Dispatch by name ("slope", "uv", "slopebis", "leftright", "updown").
LemmaReport verify_lemma(const std::string& name, const TracedSection& t, const LemmaOptions& opts = {});

nlohmann::json to_json(const AdjacentCurve& curve);
nlohmann::json to_json(const LemmaReport& report, const TracedSection& t);

}  // namespace strata::lemmalab
