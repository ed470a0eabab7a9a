#include "strata/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace strata::checks {

using geomkit::Vector;

namespace {

Vector params_of(const RootConfiguration& cfg) {
  Vector p(cfg.parameter_count());
  int k = 0;
  for (const auto& r : cfg.real_roots) p(k++) = r.y;
  for (const auto& c : cfg.complex_pairs) {
    p(k++) = c.alpha;
    p(k++) = c.beta;
  }
  return p;
}

RootConfiguration with_params(RootConfiguration cfg, const Vector& p) {
  int k = 0;
  for (auto& r : cfg.real_roots) r.y = p(k++);
  for (auto& c : cfg.complex_pairs) {
    c.alpha = p(k++);
    c.beta = p(k++);
  }
  return cfg;
}

Vector head_sums(const RootConfiguration& cfg, int count) {
  auto b = geomkit::power_sums(cfg, count);
  Vector v(count);
  for (int k = 0; k < count; ++k) v(k) = b[static_cast<std::size_t>(k)];
  return v;
}

// Moves the parameters so that (b_1..b_N) hits `target`.
RootConfiguration solve_for_sums(const RootConfiguration& start, const Vector& target) {
  const int N = start.parameter_count();
  RootConfiguration cfg = start;
  for (int it = 0; it < 50; ++it) {
    Vector f = head_sums(cfg, N) - target;
    Real scale = std::max<Real>(1, target.cwiseAbs().maxCoeff());
    if (f.cwiseAbs().maxCoeff() <= 1e-17L * scale) break;
    Vector step = geomkit::power_sum_jacobian(cfg, N).fullPivLu().solve(f);
    cfg = with_params(cfg, params_of(cfg) - step);
  }
  cfg.validate();
  return cfg;
}

std::vector<Stratum> strata_up_to(int nmax) {
  std::vector<Stratum> out;
  for (int n = 1; n <= nmax; ++n)
    for (auto& s : stratlat::enumerate_mvs(n)) out.push_back(std::move(s));
  return out;
}

Real uniform(std::mt19937_64& rng, Real lo, Real hi) {
  return lo + (hi - lo) * static_cast<Real>(rng() >> 11) * 0x1.0p-53L;
}

}  // namespace

Real scaled_rank_margin(const RootConfiguration& cfg) {
  const int N = cfg.parameter_count();
  if (N == 0) return 1;
  Matrix m = geomkit::power_sum_jacobian(cfg, N);
  for (int j = 0; j < N; ++j) m.row(j) /= Real(j + 1);
  for (int c = 0; c < N; ++c) {
    Real norm = m.col(c).norm();
    if (norm > 0) m.col(c) /= norm;
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().minCoeff();
}

Matrix finite_difference_partials(const RootConfiguration& cfg, Real h) {
  cfg.validate();
  const int n = cfg.degree();
  const int N = cfg.parameter_count();
  Matrix out(n - N, N);
  const Vector b0 = head_sums(cfg, N);
  const Real steps[4] = {-2, -1, 1, 2};
  const Real weights[4] = {1, -8, 8, -1};
  const auto lu = geomkit::power_sum_jacobian(cfg, N).fullPivLu();
  for (int u = 0; u < N; ++u) {
    // Step in b_u that moves the parameters by at most h / 5.
    const Real hu = h / (5 * std::max<Real>(lu.solve(Vector::Unit(N, u)).cwiseAbs().maxCoeff(), 1e-30L));
    Vector acc = Vector::Zero(n - N);
    for (int s = 0; s < 4; ++s) {
      Vector target = b0;
      target(u) += steps[s] * hu;
      auto moved = solve_for_sums(cfg, target);
      auto b = geomkit::power_sums(moved, n);
      for (int k = N; k < n; ++k) acc(k - N) += weights[s] * b[static_cast<std::size_t>(k)];
    }
    out.col(u) = acc / (12 * hu);
  }
  return out;
}

Real partials_error(const RootConfiguration& cfg, Real h) {
  Matrix fd = finite_difference_partials(cfg, h);
  Matrix formula = geomkit::graph_gradient_b(cfg);
  Real worst = 0;
  for (Eigen::Index r = 0; r < fd.rows(); ++r)
    for (Eigen::Index c = 0; c < fd.cols(); ++c)
      worst = std::max(worst, std::fabs(formula(r, c) - fd(r, c)) / std::max<Real>(1, std::fabs(fd(r, c))));
  return worst;
}

Real chart_consistency_error(const RootConfiguration& cfg) {
  const int n = cfg.degree();
  const int N = cfg.parameter_count();
  if (N == n) return 0;
  auto b = geomkit::power_sums(cfg, n);
  Matrix L = geomkit::newton_b_to_a_jacobian(b);
  Matrix gb = geomkit::graph_gradient_b(cfg);
  Matrix lhs = L.block(N, 0, n - N, N) + L.block(N, N, n - N, n - N) * gb;
  // G_a * L11 = L21 + L22 * G_b
  Matrix ga_chain = L.topLeftCorner(N, N).transpose().fullPivLu().solve(lhs.transpose()).transpose();
  Matrix ga = geomkit::graph_gradient_a(cfg);
  Real worst = 0;
  for (Eigen::Index r = 0; r < ga.rows(); ++r)
    for (Eigen::Index c = 0; c < ga.cols(); ++c)
      worst = std::max(worst, std::fabs(ga(r, c) - ga_chain(r, c)) / std::max<Real>(1, std::fabs(ga(r, c))));
  return worst;
}

bool PointReport::pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

PointReport check_point(const StratumPoint& point, const Tolerances& tol) {
  PointReport rep{point, {}};
  const auto& cfg = point.config;
  const bool coincident = geomkit::has_coincident_pairs(cfg);
  const bool graph = point.stratum.codimension() > 0;

  if (!coincident) {
    Real rank = scaled_rank_margin(cfg);
    rep.results.push_back({"rank", rank > tol.rank, static_cast<double>(rank)});
  }
  if (graph && !coincident) {
    Real err = partials_error(cfg, tol.fd_step);
    rep.results.push_back({"partials", err <= tol.partials, static_cast<double>(err)});
    Real chart = chart_consistency_error(cfg);
    rep.results.push_back({"chart", chart <= tol.partials, static_cast<double>(chart)});
  }
  auto frame = geomkit::tangent_frame(point);
  rep.results.push_back({"margin", frame.margin > tol.margin && !frame.rank_deficient, static_cast<double>(frame.margin)});

  auto a = geomkit::newton_b_to_a(std::span<const Real>(point.b));
  Real scale = 1;
  Real worst = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    scale = std::max(scale, std::fabs(point.a[k]));
    worst = std::max(worst, std::fabs(a[k] - point.a[k]));
  }
  rep.results.push_back({"newton", worst <= tol.newton * scale, static_cast<double>(worst / scale)});
  return rep;
}

std::vector<StratumSummary> verify_theorem(int n, std::uint64_t seed, int samples, const Tolerances& tol,
                                           const SampleBox& box) {
  std::vector<StratumSummary> out;
  for (const auto& s : stratlat::enumerate_mvs(n)) {
    StratumSummary sum{s, 0, 0, 1e300, 1e300, 0};
    for (int k = 0; k < samples; ++k) {
      auto rep = check_point(geomkit::sample_stratum(s, seed + static_cast<std::uint64_t>(k), box), tol);
      ++sum.samples;
      if (!rep.pass()) ++sum.failures;
      for (const auto& r : rep.results) {
        if (r.check == "rank") sum.min_rank = std::min(sum.min_rank, r.value);
        if (r.check == "margin") sum.min_margin = std::min(sum.min_margin, r.value);
        if (r.check == "partials") sum.max_partials_error = std::max(sum.max_partials_error, r.value);
      }
    }
    if (sum.min_rank == 1e300) sum.min_rank = 1;
    out.push_back(sum);
  }
  return out;
}

BoundaryPath real_collision_path(const StratumPoint& limit, int i, int j) {
  const auto& roots = limit.config.real_roots;
  if (i < 1 || i > static_cast<int>(roots.size())) throw DomainError("root index out of range");
  const int m = roots[static_cast<std::size_t>(i - 1)].mult;
  if (j < 1 || j >= m) throw DomainError("split needs 1 <= j < multiplicity");
  const RootConfiguration base = limit.config;
  auto path = [base, i, j, m](Real eps) {
    RootConfiguration out;
    for (int k = 0; k < static_cast<int>(base.real_roots.size()); ++k) {
      const auto& r = base.real_roots[static_cast<std::size_t>(k)];
      if (k != i - 1) {
        out.real_roots.push_back(r);
        continue;
      }
      out.real_roots.push_back({r.y - Real(m - j) * eps / m, j});
      out.real_roots.push_back({r.y + Real(j) * eps / m, m - j});
    }
    out.complex_pairs = base.complex_pairs;
    return out;
  };
  return {"real-collision", limit, path};
}

BoundaryPath pair_to_double_path(const StratumPoint& limit, int i) {
  const auto& roots = limit.config.real_roots;
  if (i < 1 || i > static_cast<int>(roots.size())) throw DomainError("root index out of range");
  if (roots[static_cast<std::size_t>(i - 1)].mult < 2) throw DomainError("pair-to-double needs a multiple root");
  const RootConfiguration base = limit.config;
  auto path = [base, i](Real eps) {
    RootConfiguration out = base;
    auto& r = out.real_roots[static_cast<std::size_t>(i - 1)];
    const Real y = r.y;
    r.mult -= 2;
    if (r.mult == 0) out.real_roots.erase(out.real_roots.begin() + (i - 1));
    out.complex_pairs.push_back({y, eps});
    return out;
  };
  return {"pair-to-double", limit, path};
}

BoundaryPath pair_collision_path(const RootConfiguration& limit, int k, int l) {
  const int p = static_cast<int>(limit.complex_pairs.size());
  if (k < 1 || l < 1 || k > p || l > p || k == l) throw DomainError("pair indices out of range");
  RootConfiguration base = limit;
  base.complex_pairs[static_cast<std::size_t>(k - 1)] = base.complex_pairs[static_cast<std::size_t>(l - 1)];
  auto path = [base, k](Real eps) {
    RootConfiguration out = base;
    out.complex_pairs[static_cast<std::size_t>(k - 1)].alpha += 0.6L * eps;
    out.complex_pairs[static_cast<std::size_t>(k - 1)].beta += 0.8L * eps;
    return out;
  };
  return {"pair-collision", geomkit::make_point(base), path};
}

BoundaryPath two_sheet_path(Real t, Real s, int sheet) {
  if (!(t < s)) throw DomainError("two-sheet path needs t < s");
  if (sheet != 1 && sheet != 2) throw DomainError("sheet must be 1 or 2");
  RootConfiguration lim;
  lim.real_roots = {{t, 2}, {s, 2}};
  auto path = [t, s, sheet](Real eps) {
    RootConfiguration out;
    const Real keep = sheet == 1 ? t : s;
    const Real open = sheet == 1 ? s : t;
    out.real_roots = {{keep, 2}};
    out.complex_pairs = {{open, eps}};
    return out;
  };
  return {sheet == 1 ? "sheet-1" : "sheet-2", geomkit::make_point(lim), path};
}

std::vector<BoundaryPath> boundary_paths(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Stratum> splittable;  // surplus >= 2, so the split source keeps surplus >= 1
  std::vector<Stratum> openable;    // a double root to open, surplus >= 2
  for (const auto& s : strata_up_to(6)) {
    const auto& v = s.mv.vec();
    if (s.codimension() >= 2) splittable.push_back(s);
    if (s.codimension() >= 2 && std::find(v.begin(), v.end(), 2) != v.end()) openable.push_back(s);
  }
  const Stratum pair_host = stratlat::validate_mv(std::vector<int>{2}, 6);

  std::vector<BoundaryPath> out;
  for (int idx = 0; idx < count; ++idx) {
    const std::uint64_t sub = rng();
    switch (idx % 4) {
      case 0: {
        const auto& s = splittable[static_cast<std::size_t>(rng() % splittable.size())];
        auto pt = geomkit::sample_stratum(s, sub);
        std::vector<int> multiple;
        for (int i = 1; i <= s.mv.groups(); ++i)
          if (s.mv[static_cast<std::size_t>(i - 1)] >= 2) multiple.push_back(i);
        const int i = multiple[static_cast<std::size_t>(rng() % multiple.size())];
        const int m = s.mv[static_cast<std::size_t>(i - 1)];
        const int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1));
        out.push_back(real_collision_path(pt, i, j));
        break;
      }
      case 1: {
        const auto& s = openable[static_cast<std::size_t>(rng() % openable.size())];
        auto pt = geomkit::sample_stratum(s, sub);
        std::vector<int> ok;
        for (int i = 1; i <= s.mv.groups(); ++i) {
          if (s.mv[static_cast<std::size_t>(i - 1)] == 2) ok.push_back(i);
        }
        out.push_back(pair_to_double_path(pt, ok[static_cast<std::size_t>(rng() % ok.size())]));
        break;
      }
      case 2: {
        auto pt = geomkit::sample_stratum(pair_host, sub);
        out.push_back(pair_collision_path(pt.config, 2, 1));
        break;
      }
      default: {
        Real t = uniform(rng, -2, 1.5L);
        Real s = uniform(rng, t + 0.3L, 2);
        out.push_back(two_sheet_path(t, s, (idx / 4) % 2 + 1));
        break;
      }
    }
  }
  return out;
}

nlohmann::json to_json(const PointReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : report.results) checks.push_back({{"check", r.check}, {"pass", r.pass}, {"value", r.value}});
  return {{"point", geomkit::to_json(report.point)}, {"pass", report.pass()}, {"checks", checks}};
}

nlohmann::json to_json(const StratumSummary& s) {
  return {{"mv", s.stratum.mv.vec()},
          {"n", s.stratum.degree},
          {"samples", s.samples},
          {"failures", s.failures},
          {"min_rank_margin", s.min_rank},
          {"min_transversality_margin", s.min_margin},
          {"max_partials_error", s.max_partials_error},
          {"verdict", s.failures == 0 ? "PASS" : "FAIL"}};
}

}  // namespace strata::checks
