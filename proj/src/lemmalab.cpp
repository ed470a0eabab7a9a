#include "strata/lemmalab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace strata::lemmalab {

using geomkit::Vector;

namespace {

// The upper configuration near A as a linear function of (u, delta), where u
// holds s free parameters of the upper stratum and delta is the separation
// of the perturbed roots (or the imaginary part of the new pair).
struct CurveModel {
  std::vector<int> upper_mults;
  int upper_pairs = 0;
  Matrix E;    // upper real-chart parameters = E * [u; delta]
  Vector u0;   // u at A
  int s = 0;

  RootConfiguration config(const Vector& u, Real delta) const {
    Vector x(s + 1);
    x.head(s) = u;
    x(s) = delta;
    Vector p = E * x;
    RootConfiguration cfg;
    int k = 0;
    for (int m : upper_mults) cfg.real_roots.push_back({p(k++), m});
    for (int t = 0; t < upper_pairs; ++t, k += 2) cfg.complex_pairs.push_back({p(k), p(k + 1)});
    return cfg;
  }

  // d a / d [u; delta], n x (s + 1).
  Matrix tangents(const RootConfiguration& cfg) const { return geomkit::parameter_tangents(cfg) * E; }
};

CurveModel make_model(const SectionSetup& setup, const CoverLabel& label) {
  const auto& base = setup.base.config;
  const int q = static_cast<int>(base.real_roots.size());
  const int p = static_cast<int>(base.complex_pairs.size());
  const int s = setup.s;
  if (label.i < 1 || label.i > q) throw DomainError("cover label index out of range: " + label.to_string());
  const int i0 = label.i - 1;
  const int m = base.real_roots[static_cast<std::size_t>(i0)].mult;

  CurveModel model;
  model.s = s;
  model.u0 = Vector(s);
  for (int k = 0, col = 0; k < q; ++k)
    if (label.kind == CoverLabel::Kind::Split || k != i0) model.u0(col++) = base.real_roots[static_cast<std::size_t>(k)].y;

  if (label.kind == CoverLabel::Kind::Split) {
    const int j = label.j;
    if (j < 1 || j >= m) throw DomainError("invalid split " + label.to_string());
    for (int k = 0; k < q; ++k) {
      if (k == i0) {
        model.upper_mults.push_back(j);
        model.upper_mults.push_back(m - j);
      } else {
        model.upper_mults.push_back(base.real_roots[static_cast<std::size_t>(k)].mult);
      }
    }
    model.upper_pairs = p;
    model.E = Matrix::Zero(q + 1 + 2 * p, s + 1);
    for (int k = 0; k < q; ++k) {
      if (k < i0) model.E(k, k) = 1;
      else if (k > i0) model.E(k + 1, k) = 1;
    }
    model.E(i0, i0) = 1;
    model.E(i0, s) = -Real(m - j) / m;
    model.E(i0 + 1, i0) = 1;
    model.E(i0 + 1, s) = Real(j) / m;
    for (int t = 0; t < 2 * p; ++t) {
      model.E(q + 1 + t, q + t) = 1;
      model.u0(q + t) = t % 2 == 0 ? base.complex_pairs[static_cast<std::size_t>(t / 2)].alpha
                                   : base.complex_pairs[static_cast<std::size_t>(t / 2)].beta;
    }
  } else {
    if (m != 2) throw DomainError("delete2 needs a double root: " + label.to_string());
    for (int k = 0; k < q; ++k)
      if (k != i0) model.upper_mults.push_back(base.real_roots[static_cast<std::size_t>(k)].mult);
    model.upper_pairs = p + 1;
    model.E = Matrix::Zero(q - 1 + 2 * (p + 1), s + 1);
    for (int k = 0; k < q - 1 + 2 * p; ++k) model.E(k, k) = 1;
    for (int t = 0; t < 2 * p; ++t)
      model.u0(q - 1 + t) = t % 2 == 0 ? base.complex_pairs[static_cast<std::size_t>(t / 2)].alpha
                                       : base.complex_pairs[static_cast<std::size_t>(t / 2)].beta;
    model.E(q - 1 + 2 * p, s - 1) = 1;  // alpha of the new pair
    model.E(q + 2 * p, s) = 1;          // beta of the new pair
    model.u0(s - 1) = base.real_roots[static_cast<std::size_t>(i0)].y;
  }
  return model;
}

bool valid(const RootConfiguration& cfg) {
  try {
    cfg.validate();
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

Real max_abs(const Vector& v) { return v.size() == 0 ? 0 : v.cwiseAbs().maxCoeff(); }

constexpr Real kTarget = 1e-17L;     // relative to the coefficient scale
constexpr Real kAccept = 1e-11L;     // the harness requires <= 1e-10
constexpr int kMaxIterations = 60;

// Damped Newton on `unknowns` for residual(x) = 0; returns the solution if it converges.
template <class Residual, class Jac, class Valid>
std::optional<Vector> damped_newton(Vector x, Residual residual, Jac jac, Valid is_valid, Real scale) {
  if (!is_valid(x)) return std::nullopt;
  Vector f = residual(x);
  Real norm = max_abs(f);
  for (int it = 0; it < kMaxIterations && norm > kTarget * scale; ++it) {
    Vector step = jac(x).fullPivLu().solve(-f);
    if (!step.allFinite()) break;
    Real lambda = 1;
    bool moved = false;
    for (int k = 0; k < 40; ++k, lambda /= 2) {
      Vector trial = x + lambda * step;
      if (!is_valid(trial)) continue;
      Vector ft = residual(trial);
      Real nt = max_abs(ft);
      if (nt < norm || (nt <= norm && lambda == 1)) {
        x = std::move(trial);
        f = std::move(ft);
        norm = nt;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  if (!(norm <= kAccept * scale)) return std::nullopt;
  return x;
}

Real coefficient_scale(const std::vector<Real>& a) {
  Real s = 1;
  for (Real v : a) s = std::max(s, std::fabs(v));
  return s;
}

CurvePoint make_curve_point(const SectionSetup& setup, const RootConfiguration& cfg, Real delta) {
  const auto a = geomkit::vieta_coeffs(cfg);
  const auto& A = setup.base.a;
  CurvePoint pt;
  pt.delta = delta;
  pt.config = cfg;
  for (int k = 0; k < setup.s; ++k)
    pt.residual = std::max(pt.residual, std::fabs(a[static_cast<std::size_t>(k)] - A[static_cast<std::size_t>(k)]));
  pt.d1 = a[static_cast<std::size_t>(setup.s)] - A[static_cast<std::size_t>(setup.s)];
  pt.d2 = a[static_cast<std::size_t>(setup.s + 1)] - A[static_cast<std::size_t>(setup.s + 1)];
  return pt;
}

// Recover u from a configuration of the upper stratum (inverse of the model on its image).
Vector unknowns_of(const CurveModel& model, const RootConfiguration& cfg) {
  Vector p(model.E.rows());
  int k = 0;
  for (const auto& r : cfg.real_roots) p(k++) = r.y;
  for (const auto& c : cfg.complex_pairs) {
    p(k++) = c.alpha;
    p(k++) = c.beta;
  }
  Vector x = model.E.fullPivLu().solve(p);
  return x.head(model.s);
}

Side side_of(const std::vector<CurvePoint>& pts) {
  bool pos = false;
  bool neg = false;
  for (const auto& p : pts) {
    if (p.d1 > 0) pos = true;
    else if (p.d1 < 0) neg = true;
    else return Side::Mixed;
  }
  if (pos == neg) return Side::Mixed;
  return pos ? Side::Right : Side::Left;
}

double as_double(Real x) { return static_cast<double>(x); }

Real relative_gap(Real a, Real b) { return std::fabs(a - b) / std::max({Real(1), std::fabs(a), std::fabs(b)}); }

const AdjacentCurve* find_curve(const TracedSection& t, CoverLabel::Kind kind, int i, int j = 0) {
  for (const auto& c : t.curves)
    if (c.label.kind == kind && c.label.i == i && (kind == CoverLabel::Kind::Delete2 || c.label.j == j)) return &c;
  return nullptr;
}

// Index of a root (or split part) as used in the lemma statements.
struct Indexing {
  const MultiplicityVector& mv;
  RootOrder order;

  int i(int label_i) const { return order == RootOrder::Decreasing ? mv.groups() - label_i + 1 : label_i; }
  int j(int label_i, int label_j) const {
    return order == RootOrder::Decreasing ? mv[static_cast<std::size_t>(label_i - 1)] - label_j : label_j;
  }
};

LemmaReport start(const std::string& name) {
  LemmaReport r;
  r.lemma = name;
  return r;
}

bool curves_usable(const TracedSection& t, LemmaReport& rep) {
  bool ok = true;
  for (const auto& c : t.curves)
    if (!c.ok()) {
      rep.notes.push_back("curve " + c.label.to_string() + " could not be traced reliably");
      ok = false;
    }
  return ok;
}

}  // namespace

std::string to_string(Side side) {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Mixed: break;
  }
  return "mixed";
}

SectionSetup section_setup(const StratumPoint& base, std::uint64_t seed) {
  const int n = base.stratum.degree;
  const int s = base.stratum.dimension();
  if (s > n - 2)
    throw DomainError("stratum " + base.stratum.to_string() + " has dimension " + std::to_string(s) +
                      " > n - 2; no section plane (a_{s+1}, a_{s+2})");
  return SectionSetup{base.stratum, base, s, seed};
}

SectionSetup section_setup(const Stratum& stratum, std::uint64_t seed, const SampleBox& box) {
  const Stratum s = stratlat::validate_mv(stratum.mv, stratum.degree);
  if (s.dimension() > s.degree - 2)
    throw DomainError("stratum " + s.to_string() + " has dimension " + std::to_string(s.dimension()) +
                      " > n - 2; no section plane (a_{s+1}, a_{s+2})");
  return section_setup(geomkit::sample_stratum(s, seed, box), seed);
}

std::vector<Real> scale_ladder(const LemmaOptions& opts) {
  std::vector<Real> out;
  Real d = opts.delta0;
  for (int k = 0; k < opts.scales; ++k, d /= 2) out.push_back(d);
  return out;
}

AdjacentCurve trace_adjacent_curve(const SectionSetup& setup, const CoverLabel& label, std::span<const Real> scales) {
  const CurveModel model = make_model(setup, label);
  const auto& A = setup.base.a;
  const Real scale = coefficient_scale(A);
  const int s = setup.s;

  AdjacentCurve curve;
  curve.label = label;
  curve.upper = stratlat::apply(setup.stratum.mv, label);

  Vector guess = model.u0;
  std::vector<Real> slopes;
  for (Real delta : scales) {
    auto residual = [&](const Vector& u) {
      auto a = geomkit::vieta_coeffs(model.config(u, delta));
      Vector f(s);
      for (int k = 0; k < s; ++k) f(k) = a[static_cast<std::size_t>(k)] - A[static_cast<std::size_t>(k)];
      return f;
    };
    auto jac = [&](const Vector& u) -> Matrix { return model.tangents(model.config(u, delta)).block(0, 0, s, s); };
    auto ok = [&](const Vector& u) { return valid(model.config(u, delta)); };
    auto sol = damped_newton(guess, residual, jac, ok, scale);
    if (!sol) {
      curve.diagnostics.push_back("newton failed at delta=" + std::to_string(as_double(delta)));
      continue;
    }
    guess = *sol;
    CurvePoint pt = make_curve_point(setup, model.config(*sol, delta), delta);
    if (pt.d1 == 0) {
      curve.diagnostics.push_back("zero offset at delta=" + std::to_string(as_double(delta)));
      continue;
    }
    slopes.push_back(pt.d2 / pt.d1);
    curve.points.push_back(std::move(pt));
  }
  if (curve.points.empty()) throw DomainError("could not trace the curve " + label.to_string());

  curve.side = side_of(curve.points);
  auto ex = geomkit::richardson(slopes, 0.5L);
  curve.slope = ex.value;
  curve.slope_error = ex.error;
  Real mag = 0;
  for (Real v : slopes) mag = std::max(mag, std::fabs(v));
  curve.slope_cauchy = geomkit::is_cauchy(slopes, 1e-12L * std::max<Real>(1, mag));
  if (!curve.slope_cauchy) curve.diagnostics.push_back("slope estimates are not a Cauchy sequence");
  if (curve.side == Side::Mixed) curve.diagnostics.push_back("curve crosses the section axis");
  return curve;
}

std::optional<CurvePoint> solve_at_offset(const SectionSetup& setup, const AdjacentCurve& curve, Real offset) {
  if (curve.points.empty() || offset == 0) return std::nullopt;
  const CurveModel model = make_model(setup, curve.label);
  const auto& A = setup.base.a;
  const Real scale = coefficient_scale(A);
  const int s = setup.s;

  // Start from the traced point with the closest offset, delta rescaled by sqrt.
  const CurvePoint* near = &curve.points.front();
  for (const auto& p : curve.points)
    if (std::fabs(std::log(std::fabs(p.d1 / offset))) < std::fabs(std::log(std::fabs(near->d1 / offset)))) near = &p;
  if ((near->d1 > 0) != (offset > 0)) return std::nullopt;
  Vector x(s + 1);
  x.head(s) = unknowns_of(model, near->config);
  x(s) = near->delta * std::sqrt(offset / near->d1);

  auto residual = [&](const Vector& v) {
    auto a = geomkit::vieta_coeffs(model.config(v.head(s), v(s)));
    Vector f(s + 1);
    for (int k = 0; k < s; ++k) f(k) = a[static_cast<std::size_t>(k)] - A[static_cast<std::size_t>(k)];
    f(s) = a[static_cast<std::size_t>(s)] - A[static_cast<std::size_t>(s)] - offset;
    return f;
  };
  auto jac = [&](const Vector& v) -> Matrix {
    return model.tangents(model.config(v.head(s), v(s))).topRows(s + 1);
  };
  auto ok = [&](const Vector& v) { return v(s) > 0 && valid(model.config(v.head(s), v(s))); };
  auto sol = damped_newton(x, residual, jac, ok, scale);
  if (!sol) return std::nullopt;
  return make_curve_point(setup, model.config(sol->head(s), (*sol)(s)), (*sol)(s));
}

TracedSection trace_section(const SectionSetup& setup, const LemmaOptions& opts) {
  TracedSection t{setup, {}};
  const auto scales = scale_ladder(opts);
  for (const auto& cover : stratlat::upward_neighbors(setup.stratum))
    for (const auto& label : cover.labels) t.curves.push_back(trace_adjacent_curve(setup, label, scales));
  return t;
}

LemmaReport verify_lemma_slope(const TracedSection& t, const LemmaOptions& opts) {
  LemmaReport rep = start("slope");
  bool ok = curves_usable(t, rep);
  std::map<int, std::vector<const AdjacentCurve*>> groups;
  for (const auto& c : t.curves) groups[c.label.i].push_back(&c);

  Real spread = 0;
  for (const auto& [i, cs] : groups)
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = a + 1; b < cs.size(); ++b) spread = std::max(spread, relative_gap(cs[a]->slope, cs[b]->slope));
  Real gap = std::numeric_limits<Real>::infinity();
  for (auto it = groups.begin(); it != groups.end(); ++it)
    for (auto jt = std::next(it); jt != groups.end(); ++jt)
      gap = std::min(gap, std::fabs(it->second.front()->slope - jt->second.front()->slope));

  bool comparisons = false;
  for (const auto& [i, cs] : groups) comparisons = comparisons || cs.size() > 1;
  comparisons = comparisons || groups.size() > 1;
  rep.vacuous = !comparisons;
  rep.margins["same_index_spread"] = as_double(spread);
  if (std::isfinite(gap)) rep.margins["distinct_index_gap"] = as_double(gap);
  if (spread > opts.tol_eq) {
    ok = false;
    rep.notes.push_back("curves with the same index have different slopes");
  }
  if (std::isfinite(gap) && !(gap > opts.tol_neq)) {
    ok = false;
    rep.notes.push_back("curves with different indices share a slope");
  }
  rep.pass = ok;
  return rep;
}

LemmaReport verify_lemma_uv(const TracedSection& t, const LemmaOptions& opts) {
  LemmaReport rep = start("uv");
  bool ok = curves_usable(t, rep);
  Real worst = 0;
  int checked = 0;
  for (const auto& c : t.curves) {
    if (c.label.kind != CoverLabel::Kind::Delete2) continue;
    const AdjacentCurve* u = find_curve(t, CoverLabel::Kind::Split, c.label.i, 1);
    if (!u) continue;
    ++checked;
    Real gap = relative_gap(u->slope, c.slope);
    worst = std::max(worst, gap);
    if (gap > opts.tol_eq) {
      ok = false;
      rep.notes.push_back("slopes of " + u->label.to_string() + " and " + c.label.to_string() + " differ");
    }
    if (u->side == Side::Mixed || c.side == Side::Mixed || u->side == c.side) {
      ok = false;
      rep.notes.push_back(u->label.to_string() + " and " + c.label.to_string() + " are not on opposite sides");
    }
  }
  rep.vacuous = checked == 0;
  rep.margins["slope_gap"] = as_double(worst);
  rep.pass = ok;
  return rep;
}

LemmaReport verify_lemma_slopebis(const TracedSection& t, const LemmaOptions& opts) {
  LemmaReport rep = start("slopebis");
  bool ok = curves_usable(t, rep);
  const Indexing idx{t.setup.stratum.mv, opts.order};
  std::vector<const AdjacentCurve*> reps;  // by lemma index
  for (int k = 1; k <= t.setup.stratum.mv.groups(); ++k)
    if (const auto* c = find_curve(t, CoverLabel::Kind::Split, idx.i(k), 1)) reps.push_back(c);
  Real margin = std::numeric_limits<Real>::infinity();
  for (std::size_t k = 0; k + 1 < reps.size(); ++k) margin = std::min(margin, reps[k]->slope - reps[k + 1]->slope);
  rep.vacuous = reps.size() < 2;
  if (!rep.vacuous) {
    rep.margins["decrease"] = as_double(margin);
    if (!(margin > opts.tol_neq)) {
      ok = false;
      rep.notes.push_back("slopes do not strictly decrease with the root index");
    }
  }
  rep.pass = ok;
  return rep;
}

LemmaReport verify_lemma_leftright(const TracedSection& t, const LemmaOptions& opts) {
  LemmaReport rep = start("leftright");
  bool ok = curves_usable(t, rep);
  const Indexing idx{t.setup.stratum.mv, opts.order};
  Real margin = std::numeric_limits<Real>::infinity();
  for (const auto& c : t.curves) {
    if (c.points.empty()) continue;
    const bool even = idx.i(c.label.i) % 2 == 0;
    int expected = even ? 1 : -1;
    if (c.label.kind == CoverLabel::Kind::Delete2) expected = -expected;
    const auto& last = c.points.back();
    margin = std::min(margin, expected * last.d1 / (last.delta * last.delta));
    if (static_cast<int>(c.side) != expected) {
      ok = false;
      rep.notes.push_back(c.label.to_string() + " lies on the " + to_string(c.side) + " side");
    }
  }
  rep.vacuous = t.curves.empty();
  if (std::isfinite(margin)) rep.margins["side"] = as_double(margin);
  rep.pass = ok;
  return rep;
}

LemmaReport verify_lemma_updown(const TracedSection& t, const LemmaOptions& opts) {
  LemmaReport rep = start("updown");
  bool ok = curves_usable(t, rep);
  Real margin = std::numeric_limits<Real>::infinity();
  int checked = 0;
  const auto& mv = t.setup.stratum.mv;
  const Indexing idx{mv, opts.order};
  for (int i = 1; i <= mv.groups(); ++i) {
    const int r = mv[static_cast<std::size_t>(i - 1)];
    if (r < 3) continue;
    std::vector<const AdjacentCurve*> cs;
    for (int j = 1; j < r; ++j)
      if (const auto* c = find_curve(t, CoverLabel::Kind::Split, i, j)) cs.push_back(c);
    if (cs.size() < 2) continue;
    const Side side = cs.front()->side;
    bool same_side = side != Side::Mixed;
    for (const auto* c : cs) same_side = same_side && c->side == side;
    if (!same_side) {
      ok = false;
      rep.notes.push_back("split curves of root " + std::to_string(i) + " are not on one side");
      continue;
    }
    // Common offsets h_k = side * H * 4^-k, inside the range every curve reached.
    Real H = std::numeric_limits<Real>::infinity();
    for (const auto* c : cs) H = std::min(H, std::fabs(c->points[std::min<std::size_t>(1, c->points.size() - 1)].d1));
    std::vector<std::vector<Real>> heights(cs.size());
    std::vector<Real> hs;
    bool solved = true;
    Real h = static_cast<int>(side) * H;
    for (int k = 0; k < opts.offsets && solved; ++k, h /= 4) {
      hs.push_back(h);
      for (std::size_t c = 0; c < cs.size(); ++c) {
        auto pt = solve_at_offset(t.setup, *cs[c], h);
        if (!pt) {
          solved = false;
          break;
        }
        heights[c].push_back(pt->d2);
      }
    }
    if (!solved) {
      ok = false;
      rep.notes.push_back("could not place the split curves of root " + std::to_string(i) + " at common offsets");
      continue;
    }
    const int sigma = idx.i(i) % 2 == 1 ? 1 : -1;  // +1: larger j above
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = 0; b < cs.size(); ++b) {
        if (!(idx.j(i, cs[a]->label.j) > idx.j(i, cs[b]->label.j))) continue;
        ++checked;
        std::vector<Real> normalized;
        bool ordered = true;
        for (std::size_t k = 0; k < hs.size(); ++k) {
          Real d = heights[a][k] - heights[b][k];  // lemma index j of a exceeds that of b
          if (!(sigma * d > 0)) ordered = false;
          normalized.push_back(d / std::pow(std::fabs(hs[k]), Real(1.5)));
        }
        Real kappa = geomkit::richardson(normalized, 0.5L).value;
        margin = std::min(margin, sigma * kappa);
        if (!ordered || !(sigma * kappa > opts.tol_neq)) {
          ok = false;
          rep.notes.push_back(cs[a]->label.to_string() + " is not " + (sigma > 0 ? "above " : "below ") +
                              cs[b]->label.to_string());
        }
      }
  }
  rep.vacuous = checked == 0;
  if (std::isfinite(margin)) rep.margins["separation"] = as_double(margin);
  rep.pass = ok;
  return rep;
}

LemmaReport verify_lemma(const std::string& name, const TracedSection& t, const LemmaOptions& opts) {
  if (name == "slope") return verify_lemma_slope(t, opts);
  if (name == "uv") return verify_lemma_uv(t, opts);
  if (name == "slopebis") return verify_lemma_slopebis(t, opts);
  if (name == "leftright") return verify_lemma_leftright(t, opts);
  if (name == "updown") return verify_lemma_updown(t, opts);
  throw DomainError("unknown lemma '" + name + "'");
}

nlohmann::json to_json(const AdjacentCurve& curve) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : curve.points)
    pts.push_back({{"delta", as_double(p.delta)},
                   {"d1", as_double(p.d1)},
                   {"d2", as_double(p.d2)},
                   {"residual", as_double(p.residual)}});
  return {{"label", curve.label.to_string()},
          {"upper", curve.upper.vec()},
          {"slope", as_double(curve.slope)},
          {"slope_error", as_double(curve.slope_error)},
          {"cauchy", curve.slope_cauchy},
          {"side", to_string(curve.side)},
          {"diagnostics", curve.diagnostics},
          {"points", pts}};
}

nlohmann::json to_json(const LemmaReport& report, const TracedSection& t) {
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : t.curves) curves.push_back(to_json(c));
  return {{"lemma", report.lemma},
          {"stratum", t.setup.stratum.mv.vec()},
          {"n", t.setup.stratum.degree},
          {"seed", t.setup.seed},
          {"verdict", report.pass ? "PASS" : "FAIL"},
          {"vacuous", report.vacuous},
          {"margins", report.margins},
          {"notes", report.notes},
          {"base_point", geomkit::to_json(t.setup.base)},
          {"curves", curves}};
}

}  // namespace strata::lemmalab
