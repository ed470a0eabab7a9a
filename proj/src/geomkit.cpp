#include "strata/geomkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace strata::geomkit {

namespace {

using Poly = std::vector<Real>;  // descending coefficients

Poly polymul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly power_of_linear(Real y, int m) {
  Poly p{1};
  for (int k = 0; k < m; ++k) p = polymul(p, Poly{1, -y});
  return p;
}

Poly pair_quadratic(const ComplexPair<Real>& c) { return {1, -2 * c.alpha, c.alpha * c.alpha + c.beta * c.beta}; }

// Factors of the configuration, one per parameter group.
std::vector<Poly> factors_of(const RootConfiguration& cfg) {
  std::vector<Poly> f;
  for (const auto& r : cfg.real_roots) f.push_back(power_of_linear(r.y, r.mult));
  for (const auto& c : cfg.complex_pairs) f.push_back(pair_quadratic(c));
  return f;
}

Poly product_except(const std::vector<Poly>& f, std::size_t skip) {
  Poly p{1};
  for (std::size_t k = 0; k < f.size(); ++k)
    if (k != skip) p = polymul(p, f[k]);
  return p;
}

// Coefficients a_1..a_n of a degree <= n-1 polynomial perturbation.
std::vector<Real> as_coefficient_delta(const Poly& p, int n) {
  std::vector<Real> out(static_cast<std::size_t>(n), 0);
  // p has degree <= n-1; coefficient of x^{n-i} goes to a_i.
  const int deg = static_cast<int>(p.size()) - 1;
  for (int k = 0; k <= deg; ++k) {
    int power = deg - k;
    int i = n - power;
    if (i >= 1 && i <= n) out[static_cast<std::size_t>(i - 1)] += p[static_cast<std::size_t>(k)];
  }
  return out;
}

Complex ipow(Complex z, int e) {
  Complex r(1, 0);
  for (int k = 0; k < e; ++k) r *= z;
  return r;
}

Real ipow(Real x, int e) {
  Real r = 1;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

Real canonical(std::mt19937_64& rng) { return static_cast<Real>(rng() >> 11) * 0x1.0p-53L; }

Real to_double_precision(Real x) { return static_cast<Real>(static_cast<double>(x)); }

}  // namespace

// ---------------------------------------------------------------------------
// Coordinates

std::vector<Real> vieta_coeffs(const RootConfiguration& cfg) {
  Poly p{1};
  for (const auto& f : factors_of(cfg)) p = polymul(p, f);
  return std::vector<Real>(p.begin() + 1, p.end());
}

std::vector<Real> power_sums(const RootConfiguration& cfg, int upto) {
  std::vector<Real> b(static_cast<std::size_t>(std::max(upto, 0)), 0);
  for (int i = 1; i <= upto; ++i) {
    Real s = 0;
    for (const auto& r : cfg.real_roots) s += r.mult * ipow(r.y, i);
    for (const auto& c : cfg.complex_pairs) s += 2 * ipow(Complex(c.alpha, c.beta), i).real();
    b[static_cast<std::size_t>(i - 1)] = s;
  }
  return b;
}

Matrix newton_b_to_a_jacobian(std::span<const Real> b) {
  const int n = static_cast<int>(b.size());
  auto a = newton_b_to_a(b);
  Matrix d = Matrix::Zero(n, n);
  for (int j = 1; j <= n; ++j) {
    for (int m = 1; m <= n; ++m) {
      Real acc = j == m ? 1 : 0;
      for (int i = 1; i < j; ++i) {
        acc += d(i - 1, m - 1) * b[static_cast<std::size_t>(j - i - 1)];
        if (j - i == m) acc += a[static_cast<std::size_t>(i - 1)];
      }
      d(j - 1, m - 1) = -acc / j;
    }
  }
  return d;
}

StratumPoint make_point(RootConfiguration cfg) {
  cfg.validate();
  const int n = cfg.degree();
  StratumPoint p{stratlat::validate_mv(cfg.mv(), n), std::move(cfg), {}, {}};
  p.a = vieta_coeffs(p.config);
  p.b = power_sums(p.config, n);
  return p;
}

StratumPoint sample_stratum(const Stratum& stratum, std::uint64_t seed, const SampleBox& box) {
  const Stratum s = stratlat::validate_mv(stratum.mv, stratum.degree);
  const int q = s.mv.groups();
  const int pairs = s.complex_pairs();
  const Real span = box.hi - box.lo;
  const Real slack = span - (q > 0 ? (q - 1) * box.min_separation : 0);
  if (!(slack > 0) && q > 1) throw DomainError("sample box too small for the requested root separation");
  if (pairs > 0 && !(box.beta_max >= box.beta_min && box.beta_min > 0))
    throw DomainError("sample box needs 0 < beta_min <= beta_max");

  std::mt19937_64 rng(seed);
  RootConfiguration cfg;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 1000) throw DomainError("could not honour the separation inside the sample box");
    std::vector<Real> u(static_cast<std::size_t>(q));
    for (auto& x : u) x = canonical(rng) * slack;
    std::sort(u.begin(), u.end());
    cfg.real_roots.clear();
    bool ok = true;
    for (int k = 0; k < q; ++k) {
      Real y = to_double_precision(box.lo + u[static_cast<std::size_t>(k)] + k * box.min_separation);
      if (k > 0 && y - cfg.real_roots.back().y < box.min_separation * (1 - 1e-12L)) ok = false;
      cfg.real_roots.push_back({y, s.mv[static_cast<std::size_t>(k)]});
    }
    if (!ok) continue;
    cfg.complex_pairs.clear();
    for (int k = 0; k < pairs && ok; ++k) {
      bool placed = false;
      for (int t = 0; t < 1000 && !placed; ++t) {
        Real alpha = to_double_precision(box.lo + canonical(rng) * span);
        Real beta = to_double_precision(box.beta_min + canonical(rng) * (box.beta_max - box.beta_min));
        placed = true;
        for (const auto& c : cfg.complex_pairs)
          if (std::hypot(c.alpha - alpha, c.beta - beta) < box.min_separation) placed = false;
        if (placed) cfg.complex_pairs.push_back({alpha, beta});
      }
      ok = placed;
    }
    if (ok) break;
  }
  return make_point(std::move(cfg));
}

bool has_coincident_pairs(const RootConfiguration& cfg) {
  const auto& c = cfg.complex_pairs;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i].alpha == c[j].alpha && c[i].beta == c[j].beta) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Jacobians

Complex JacobianReport::cofactor(int u, int i) const {
  const int N = static_cast<int>(matrix.rows());
  if (u < 1 || u > N || i < 1 || i > N) throw DomainError("cofactor index out of range");
  if (N == 1) return Complex(1, 0);
  CMatrix minor(N - 1, N - 1);
  for (int r = 0, rr = 0; r < N; ++r) {
    if (r == u - 1) continue;
    for (int c = 0, cc = 0; c < N; ++c) {
      if (c == i - 1) continue;
      minor(rr, cc++) = matrix(r, c);
    }
    ++rr;
  }
  Complex det = minor.determinant();
  return ((u + i) % 2 == 0) ? det : -det;
}

JacobianReport jacobian(const RootConfiguration& cfg, Chart chart) {
  cfg.validate();
  const int N = cfg.parameter_count();
  JacobianReport rep{chart, CMatrix::Zero(N, N), Complex(0), {}, {}};
  if (chart == Chart::ComplexRoots) {
    for (const auto& r : cfg.real_roots) {
      rep.nodes.emplace_back(r.y, 0);
      rep.weights.push_back(r.mult);
    }
    for (const auto& c : cfg.complex_pairs) {
      rep.nodes.emplace_back(c.alpha, c.beta);
      rep.weights.push_back(1);
      rep.nodes.emplace_back(c.alpha, -c.beta);
      rep.weights.push_back(1);
    }
    for (int j = 1; j <= N; ++j)
      for (int i = 0; i < N; ++i)
        rep.matrix(j - 1, i) = Real(j) * Real(rep.weights[static_cast<std::size_t>(i)]) *
                               ipow(rep.nodes[static_cast<std::size_t>(i)], j - 1);
  } else {
    rep.matrix = power_sum_jacobian(cfg, N).cast<Complex>();
  }
  rep.determinant = N == 0 ? Complex(1) : rep.matrix.determinant();
  return rep;
}

Matrix power_sum_jacobian(const RootConfiguration& cfg, int rows) {
  const int N = cfg.parameter_count();
  Matrix m = Matrix::Zero(rows, N);
  for (int j = 1; j <= rows; ++j) {
    int col = 0;
    for (const auto& r : cfg.real_roots) m(j - 1, col++) = Real(j) * r.mult * ipow(r.y, j - 1);
    for (const auto& c : cfg.complex_pairs) {
      Complex z = ipow(Complex(c.alpha, c.beta), j - 1);
      m(j - 1, col++) = 2 * Real(j) * z.real();
      m(j - 1, col++) = -2 * Real(j) * z.imag();
    }
  }
  return m;
}

Matrix parameter_tangents(const RootConfiguration& cfg) {
  cfg.validate();
  const int n = cfg.degree();
  const int N = cfg.parameter_count();
  auto f = factors_of(cfg);
  Matrix t = Matrix::Zero(n, N);
  auto put = [&](int col, const Poly& dp) {
    auto d = as_coefficient_delta(dp, n);
    for (int i = 0; i < n; ++i) t(i, col) = d[static_cast<std::size_t>(i)];
  };
  int col = 0;
  std::size_t idx = 0;
  for (const auto& r : cfg.real_roots) {
    Poly d = power_of_linear(r.y, r.mult - 1);
    for (auto& c : d) c *= -Real(r.mult);
    put(col++, polymul(d, product_except(f, idx++)));
  }
  for (const auto& c : cfg.complex_pairs) {
    Poly rest = product_except(f, idx++);
    put(col++, polymul(Poly{-2, 2 * c.alpha}, rest));
    put(col++, polymul(Poly{2 * c.beta}, rest));
  }
  return t;
}

Complex graph_partial_formula(const RootConfiguration& cfg, int k, int u) {
  const int N = cfg.parameter_count();
  if (k <= N || u < 1 || u > N) throw DomainError("graph partial needs k > n - r and 1 <= u <= n - r");
  JacobianReport rep = jacobian(cfg, Chart::ComplexRoots);
  if (rep.determinant == Complex(0)) throw DomainError("singular root Jacobian (coincident parameter roots)");
  Complex sum(0);
  for (int i = 1; i <= N; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    sum += Real(rep.weights[idx]) * ipow(rep.nodes[idx], k - 1) * rep.cofactor(u, i);
  }
  return Real(k) * sum / rep.determinant;
}

ConfigPath separating_path(const RootConfiguration& cfg) {
  // Each repeated pair is pushed off along (0.6, 0.8) times its repeat count.
  std::vector<int> shift(cfg.complex_pairs.size(), 0);
  for (std::size_t j = 0; j < cfg.complex_pairs.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (cfg.complex_pairs[i].alpha == cfg.complex_pairs[j].alpha &&
          cfg.complex_pairs[i].beta == cfg.complex_pairs[j].beta)
        shift[j] = std::max(shift[j], shift[i] + 1);
  return [cfg, shift](Real eps) {
    RootConfiguration out = cfg;
    for (std::size_t j = 0; j < shift.size(); ++j) {
      out.complex_pairs[j].alpha += 0.6L * eps * shift[j];
      out.complex_pairs[j].beta += 0.8L * eps * shift[j];
    }
    return out;
  };
}

Real graph_partial(const RootConfiguration& cfg, int k, int u) {
  if (!has_coincident_pairs(cfg)) return graph_partial_formula(cfg, k, u).real();
  auto rep = boundary_limit_probe(separating_path(cfg), {{k, u}});
  return rep.series.front().limit.value;
}

Matrix graph_gradient_b(const RootConfiguration& cfg) {
  const int n = cfg.degree();
  const int N = cfg.parameter_count();
  Matrix g(n - N, N);
  for (int k = N + 1; k <= n; ++k)
    for (int u = 1; u <= N; ++u) g(k - N - 1, u - 1) = graph_partial(cfg, k, u);
  return g;
}

Matrix graph_gradient_a(const RootConfiguration& cfg) {
  const int n = cfg.degree();
  const int N = cfg.parameter_count();
  Matrix t = parameter_tangents(cfg);
  Matrix top = t.topRows(N);
  Matrix bottom = t.bottomRows(n - N);
  if (n == N) return Matrix(0, N);
  // G * top = bottom
  Matrix gt = top.transpose().fullPivLu().solve(bottom.transpose());
  return gt.transpose();
}

Real transversality_margin(const Matrix& basis, int dim) {
  if (basis.cols() == 0) return 1;
  Eigen::JacobiSVD<Matrix> svd(basis, Eigen::ComputeThinU);
  Matrix u = svd.matrixU();
  Eigen::JacobiSVD<Matrix> top(u.topRows(dim));
  return top.singularValues().minCoeff();
}

// ---------------------------------------------------------------------------
// Tangent frames and limits

namespace {

bool basis_rank_deficient(const Matrix& basis) {
  if (basis.cols() == 0) return false;
  Eigen::JacobiSVD<Matrix> svd(basis);
  auto s = svd.singularValues();
  return s.minCoeff() <= 1e-14L * std::max<Real>(1, s.maxCoeff());
}

Matrix graph_basis(const Matrix& g, int n) {
  const auto N = g.cols();
  Matrix basis(n, N);
  basis.topRows(N) = Matrix::Identity(N, N);
  basis.bottomRows(n - N) = g;
  return basis;
}

}  // namespace

TangentFrame tangent_frame(const StratumPoint& point) {
  if (has_coincident_pairs(point.config)) return tangent_frame_limit(point, separating_path(point.config));
  TangentFrame f;
  f.point = point;
  f.source = point.stratum;
  f.basis = parameter_tangents(point.config);
  f.rank_deficient = basis_rank_deficient(f.basis);
  f.graph_gradient = graph_gradient_a(point.config);
  f.margin = transversality_margin(f.basis, point.config.parameter_count());
  return f;
}

TangentFrame tangent_frame_limit(const StratumPoint& limit_point, const ConfigPath& path, const ProbeOptions& opts) {
  std::vector<Matrix> gs;
  RootConfiguration first = path(opts.eps0);
  first.validate();
  const int n = first.degree();
  const int N = first.parameter_count();
  Real eps = opts.eps0;
  for (int m = 0; m < opts.steps; ++m, eps *= opts.ratio) gs.push_back(graph_gradient_a(path(eps)));
  Matrix g(n - N, N);
  Real worst = 0;
  std::vector<Real> series(gs.size());
  for (int r = 0; r < n - N; ++r)
    for (int c = 0; c < N; ++c) {
      for (std::size_t m = 0; m < gs.size(); ++m) series[m] = gs[m](r, c);
      auto ex = richardson(series, opts.ratio);
      g(r, c) = ex.value;
      worst = std::max(worst, ex.error);
    }
  TangentFrame f;
  f.point = limit_point;
  f.source = stratlat::validate_mv(first.mv(), n);
  f.graph_gradient = g;
  f.basis = graph_basis(g, n);
  f.margin = transversality_margin(f.basis, N);
  f.extrapolated = true;
  f.limit_error = worst;
  return f;
}

Extrapolation richardson(std::span<const Real> values, Real ratio) {
  const std::size_t M = values.size();
  if (M == 0) return {};
  if (M == 1) return {values[0], std::numeric_limits<Real>::infinity()};
  std::vector<std::vector<Real>> t(M, std::vector<Real>(M, 0));
  for (std::size_t m = 0; m < M; ++m) t[m][0] = values[m];
  Real pk = 1;
  for (std::size_t k = 1; k < M; ++k) {
    pk *= ratio;
    for (std::size_t m = k; m < M; ++m) t[m][k] = (t[m][k - 1] - pk * t[m - 1][k - 1]) / (1 - pk);
  }
  // Pick the column whose last two entries agree best.
  Extrapolation best{t[M - 1][0], std::fabs(t[M - 1][0] - t[M - 2][0])};
  for (std::size_t k = 1; k + 1 < M; ++k) {
    Real err = std::fabs(t[M - 1][k] - t[M - 2][k]);
    if (err < best.error) best = {t[M - 1][k], err};
  }
  return best;
}

bool is_cauchy(std::span<const Real> values, Real floor, Real min_ratio) {
  if (values.size() < 3) return false;
  std::vector<Real> d;
  for (std::size_t m = 0; m + 1 < values.size(); ++m) d.push_back(std::fabs(values[m + 1] - values[m]));
  Real log_sum = 0;
  int count = 0;
  for (std::size_t m = 0; m + 1 < d.size(); ++m) {
    if (d[m] <= floor) continue;
    log_sum += std::log(d[m] / std::max(d[m + 1], floor));
    ++count;
  }
  if (count == 0) return d.back() <= floor || d.size() == 1;
  if (d.back() > d.front() && d.back() > floor) return false;
  return log_sum / count >= std::log(min_ratio);
}

BoundaryProbeReport boundary_limit_probe(const ConfigPath& path, std::vector<std::pair<int, int>> targets,
                                         const ProbeOptions& opts) {
  if (opts.steps < 6) throw DomainError("boundary probe needs at least 6 path points");
  RootConfiguration first = path(opts.eps0);
  first.validate();
  const int n = first.degree();
  const int N = first.parameter_count();
  if (targets.empty())
    for (int k = N + 1; k <= n; ++k)
      for (int u = 1; u <= N; ++u) targets.emplace_back(k, u);

  BoundaryProbeReport rep;
  for (const auto& [k, u] : targets) rep.series.push_back({k, u, {}, false, {}});
  Real eps = opts.eps0;
  for (int m = 0; m < opts.steps; ++m, eps *= opts.ratio) {
    rep.eps.push_back(eps);
    RootConfiguration cfg = path(eps);
    for (auto& s : rep.series) s.values.push_back(graph_partial_formula(cfg, s.k, s.u).real());
  }
  rep.converged = true;
  for (auto& s : rep.series) {
    Real scale = 0;
    for (Real v : s.values) scale = std::max(scale, std::fabs(v));
    s.cauchy = is_cauchy(s.values, 1e-12L * std::max<Real>(1, scale));
    s.limit = richardson(s.values, opts.ratio);
    if (!s.cauchy || !std::isfinite(s.limit.value)) rep.converged = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Real / complex splitting

namespace {

std::vector<Real> to_real_desc(const polycore::Polynomial& p) {
  std::vector<Real> out;
  for (const auto& c : p.descending()) out.push_back(to_real(c));
  return out;
}

Real numeric_resultant(const std::vector<Real>& p, const std::vector<Real>& q) {
  const int m = static_cast<int>(p.size()) - 1;
  const int n = static_cast<int>(q.size()) - 1;
  if (m + n == 0) return 1;
  Matrix s = Matrix::Zero(m + n, m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = p[static_cast<std::size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = q[static_cast<std::size_t>(k)];
  return s.determinant();
}

}  // namespace

SplitResult split_real_complex(const polycore::MonicPolynomial& p) {
  using polycore::Polynomial;
  const Polynomial one = Polynomial::constant(Rational(1));
  Polynomial q = one;
  Polynomial r = one;
  bool exact = true;
  std::vector<Real> real_roots_numeric;  // for the fallback, with multiplicity

  for (const auto& part : polycore::squarefree_decomposition(p)) {
    const auto e = static_cast<unsigned>(part.multiplicity);
    Polynomial f = part.factor;
    auto roots = polycore::isolate_real_roots(f);
    for (const auto& iv : roots) {
      if (iv.exact()) {
        f = polycore::exact_div(f, Polynomial::linear(iv.lo));
        r = r * pow(Polynomial::linear(iv.lo), e);
      }
      Rational mid = iv.lo;
      if (!iv.exact()) {
        auto fine = polycore::refine_interval(part.factor, iv, Rational(1, 1) / (Integer(1) << 80));
        mid = (fine.lo + fine.hi) / 2;
      }
      for (unsigned k = 0; k < e; ++k) real_roots_numeric.push_back(to_real(mid));
    }
    int remaining = polycore::count_real_roots(polycore::sturm_chain(f));
    if (f.degree() < 1) continue;
    if (remaining == 0)
      q = q * pow(f, e);
    else if (remaining == f.degree())
      r = r * pow(f, e);
    else
      exact = false;
  }

  SplitResult out;
  if (exact) {
    out.exact = true;
    out.Q = q;
    out.R = r;
    out.resultant = polycore::resultant(q, r);
    out.q_numeric = to_real_desc(q);
    out.r_numeric = to_real_desc(r);
    out.resultant_numeric = to_real(out.resultant);
    return out;
  }
  std::vector<Real> rn{1};
  for (Real y : real_roots_numeric) rn = polymul(rn, {1, -y});
  // Q = P / R by synthetic division in extended precision.
  std::vector<Real> pn = to_real_desc(p.to_polynomial());
  std::vector<Real> qn(pn.size() - rn.size() + 1, 0);
  std::vector<Real> rem = pn;
  for (std::size_t k = 0; k < qn.size(); ++k) {
    qn[k] = rem[k];
    for (std::size_t i = 0; i < rn.size(); ++i) rem[k + i] -= qn[k] * rn[i];
  }
  out.q_numeric = qn;
  out.r_numeric = rn;
  out.resultant_numeric = numeric_resultant(qn, rn);
  return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const StratumPoint& point) {
  nlohmann::json rr = nlohmann::json::array();
  for (const auto& r : point.config.real_roots) rr.push_back({{"y", static_cast<double>(r.y)}, {"mult", r.mult}});
  nlohmann::json cp = nlohmann::json::array();
  for (const auto& c : point.config.complex_pairs)
    cp.push_back({{"alpha", static_cast<double>(c.alpha)}, {"beta", static_cast<double>(c.beta)}});
  std::vector<double> a(point.a.begin(), point.a.end());
  std::vector<double> b(point.b.begin(), point.b.end());
  return {{"mv", point.stratum.mv.vec()}, {"n", point.stratum.degree}, {"real_roots", rr}, {"complex_pairs", cp},
          {"a", a}, {"b", b}};
}

StratumPoint point_from_json(const nlohmann::json& j) {
  try {
    RootConfiguration cfg;
    for (const auto& r : j.at("real_roots")) cfg.real_roots.push_back({r.at("y").get<Real>(), r.at("mult").get<int>()});
    if (j.contains("complex_pairs"))
      for (const auto& c : j.at("complex_pairs"))
        cfg.complex_pairs.push_back({c.at("alpha").get<Real>(), c.at("beta").get<Real>()});
    StratumPoint p = make_point(std::move(cfg));
    if (j.contains("n") && j.at("n").get<int>() != p.stratum.degree)
      throw DomainError("point degree does not match its roots");
    if (j.contains("mv") && MultiplicityVector(j.at("mv").get<std::vector<int>>()) != p.stratum.mv)
      throw DomainError("point mv does not match its roots");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid stratum point JSON: ") + e.what());
  }
}

nlohmann::json to_json(const TangentFrame& frame) {
  auto rows = [](const Matrix& m, bool columns) {
    nlohmann::json out = nlohmann::json::array();
    const auto outer = columns ? m.cols() : m.rows();
    const auto inner = columns ? m.rows() : m.cols();
    for (Eigen::Index a = 0; a < outer; ++a) {
      std::vector<double> v;
      for (Eigen::Index b = 0; b < inner; ++b) v.push_back(static_cast<double>(columns ? m(b, a) : m(a, b)));
      out.push_back(v);
    }
    return out;
  };
  return {{"point", to_json(frame.point)},
          {"source_mv", frame.source.mv.vec()},
          {"basis", rows(frame.basis, true)},
          {"graph_gradient", rows(frame.graph_gradient, false)},
          {"margin", static_cast<double>(frame.margin)},
          {"extrapolated", frame.extrapolated},
          {"rank_deficient", frame.rank_deficient}};
}

}  // namespace strata::geomkit
