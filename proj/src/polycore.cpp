#include "strata/polycore.hpp"

#include <algorithm>
#include <cctype>

#include "strata/error.hpp"

namespace strata::polycore {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({Rational(-root), Rational(1)}); }

Polynomial Polynomial::from_descending(std::span<const Rational> coeffs) {
  return Polynomial(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

std::vector<Rational> Polynomial::descending() const { return {c_.rbegin(), c_.rend()}; }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

int Polynomial::sign_at_infinity(bool positive) const {
  if (c_.empty()) return 0;
  int s = sgn(c_.back());
  return (positive || degree() % 2 == 0) ? s : -s;
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  return scaled(Rational(1) / c_.back());
}

Polynomial Polynomial::scaled(const Rational& k) const {
  std::vector<Rational> v(c_);
  for (auto& c : v) c *= k;
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    bool unit = mag == 1 && k > 0;
    if (!unit) out += strata::to_string(mag);
    if (k > 0) out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem(a.ascending().begin(), a.ascending().end());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational& lead = b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / lead;
    if (f == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b.coeff(i);
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(Rational(1));
  Polynomial base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> v(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) v[static_cast<std::size_t>(k - 1)] = p.coeff(k) * k;
  return Polynomial(std::move(v));
}

// ---------------------------------------------------------------------------
// gcd over Z[x] with primitive remainders

namespace {

using ZPoly = std::vector<Integer>;  // ascending, trimmed

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  Integer g(0);
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    Integer la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    ztrim(a);
  }
  return a;
}

}  // namespace

std::vector<Integer> primitive_integer(const Polynomial& p) {
  Integer l(1);
  for (const auto& c : p.ascending()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(p.ascending().size());
  for (const auto& c : p.ascending()) {
    Integer v = c.get_num() * (l / c.get_den());
    z.push_back(v);
  }
  make_primitive(z);
  return z;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly u = primitive_integer(a);
  ZPoly v = primitive_integer(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return Polynomial::constant(Rational(1));
    ZPoly r = pseudo_remainder(u, v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> q;
  q.reserve(u.size());
  for (auto& c : u) q.emplace_back(c);
  return Polynomial(std::move(q)).monic();
}

// ---------------------------------------------------------------------------
// MonicPolynomial

MonicPolynomial::MonicPolynomial(std::vector<Rational> coeffs) : a_(std::move(coeffs)) {
  if (a_.empty()) throw DomainError("monic polynomial must have degree >= 1");
  for (auto& c : a_) c.canonicalize();
}

Polynomial MonicPolynomial::to_polynomial() const {
  std::vector<Rational> desc;
  desc.reserve(a_.size() + 1);
  desc.emplace_back(1);
  desc.insert(desc.end(), a_.begin(), a_.end());
  return Polynomial::from_descending(desc);
}

MonicPolynomial MonicPolynomial::from_polynomial(const Polynomial& p) {
  if (p.degree() < 1) throw DomainError("expected a polynomial of degree >= 1");
  if (p.leading() != 1) throw DomainError("expected a monic polynomial");
  auto desc = p.descending();
  return MonicPolynomial(std::vector<Rational>(desc.begin() + 1, desc.end()));
}

MonicPolynomial MonicPolynomial::parse(std::string_view text) {
  std::vector<Rational> desc;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    desc.push_back(parse_rational(token, start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (desc.size() < 2) throw ParseError("need at least two coefficients (degree >= 1)", 0);
  if (desc.front() != 1) {
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
    throw ParseError("leading coefficient must be 1", lead);
  }
  return MonicPolynomial(std::vector<Rational>(desc.begin() + 1, desc.end()));
}

std::string MonicPolynomial::to_text() const {
  std::string out = "1";
  for (const auto& c : a_) out += "," + strata::to_string(c);
  return out;
}

// ---------------------------------------------------------------------------
// Square-free decomposition (Yun)

std::vector<SquareFreePart> squarefree_decomposition(const Polynomial& p_in) {
  if (p_in.degree() < 1) throw DomainError("square-free decomposition needs degree >= 1");
  Polynomial p = p_in.monic();
  std::vector<SquareFreePart> out;
  Polynomial dp = derivative(p);
  Polynomial a = gcd(p, dp);
  Polynomial b = exact_div(p, a);
  Polynomial c = exact_div(dp, a);
  Polynomial d = c - derivative(b);
  int i = 1;
  while (b.degree() >= 1) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) out.push_back({g, i});
    Polynomial nb = exact_div(b, g);
    c = exact_div(d, g);
    b = nb;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sturm sequences

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  auto normalize = [](const Polynomial& q) { return q.scaled(Rational(1) / abs(q.leading())); };
  chain.push_back(normalize(p));
  Polynomial dp = derivative(p);
  if (dp.is_zero()) return chain;
  chain.push_back(normalize(dp));
  while (true) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    Polynomial r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(normalize(-r));
  }
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sign_variations(std::span<const Polynomial> chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) s.push_back(q.sign_at(x));
  return variations(s);
}

int sign_variations_at_infinity(std::span<const Polynomial> chain, bool positive) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) s.push_back(q.sign_at_infinity(positive));
  return variations(s);
}

int count_real_roots(std::span<const Polynomial> chain, const Rational& lo, const Rational& hi) {
  if (chain.empty()) return 0;
  if (chain[0].sign_at(lo) == 0) throw DomainError("Sturm count requires a non-root lower endpoint");
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_real_roots(std::span<const Polynomial> chain) {
  if (chain.empty()) return 0;
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k) / lead)));
  return m + 1;
}

// ---------------------------------------------------------------------------
// Root isolation

namespace {

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

// A point strictly inside (lo, hi) at which p does not vanish.
Rational nonroot_split(const Polynomial& p, const Rational& lo, const Rational& hi) {
  for (int den = 2;; ++den) {
    for (int num = 1; num < den; ++num) {
      Rational t = lo + (hi - lo) * Rational(num, den);
      t.canonicalize();
      if (p.sign_at(t) != 0) return t;
    }
  }
}

// The interval holds exactly one root of square-free p; detect rational roots
// exactly. Rational roots u/v of a primitive integer polynomial have v | lc, so
// once the interval is narrower than 1/lc it contains at most one candidate.
IsolatingInterval settle_single(const Polynomial& p, IsolatingInterval iv, const Integer& lead) {
  Rational width(Integer(1), lead);
  width.canonicalize();
  iv = refine_interval(p, iv, width);
  if (iv.exact()) return iv;
  Integer k;
  Rational scaled = iv.lo * lead;
  mpz_cdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational cand(k, lead);
  cand.canonicalize();
  if (cand == iv.lo) cand += width;
  if (cand > iv.lo && cand < iv.hi && p.sign_at(cand) == 0) return {cand, cand};
  return iv;
}

}  // namespace

IsolatingInterval refine_interval(const Polynomial& p, IsolatingInterval iv, const Rational& width) {
  if (iv.exact()) return iv;
  int s_lo = p.sign_at(iv.lo);
  while (iv.hi - iv.lo > width) {
    Rational m = midpoint(iv.lo, iv.hi);
    int s = p.sign_at(m);
    if (s == 0) return {m, m};
    if (s == s_lo)
      iv.lo = m;
    else
      iv.hi = m;
  }
  return iv;
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
  std::vector<IsolatingInterval> out;
  if (p.degree() < 1) return out;
  auto chain = sturm_chain(p);
  Rational bound = cauchy_bound(p);
  Integer lead = primitive_integer(p).back();

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack;
  int total = count_real_roots(chain, Rational(-bound), bound);
  if (total > 0) stack.push_back({Rational(-bound), bound, total});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 1) {
      out.push_back(settle_single(p, {cur.lo, cur.hi}, lead));
      continue;
    }
    Rational m = midpoint(cur.lo, cur.hi);
    if (p.sign_at(m) == 0) m = nonroot_split(p, cur.lo, cur.hi);
    int left = count_real_roots(chain, cur.lo, m);
    int right = cur.count - left;
    // Right half first so the left one is processed next (stack order).
    if (right > 0) stack.push_back({m, cur.hi, right});
    if (left > 0) stack.push_back({cur.lo, m, left});
  }
  return out;
}

namespace {

bool overlaps(const IsolatingInterval& a, const IsolatingInterval& b) {
  if (a.exact() && b.exact()) return a.lo == b.lo;
  if (a.exact()) return b.lo < a.lo && a.lo < b.hi;
  if (b.exact()) return a.lo < b.lo && b.lo < a.hi;
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

}  // namespace

std::vector<RealRootInfo> ordered_real_roots(const Polynomial& p) {
  std::vector<RealRootInfo> roots;
  if (p.degree() < 1) return roots;
  auto parts = squarefree_decomposition(p);
  for (std::size_t f = 0; f < parts.size(); ++f)
    for (auto& iv : isolate_real_roots(parts[f].factor)) roots.push_back({iv, parts[f].multiplicity, f});

  // Roots of the same factor are already disjoint; refine across factors
  // until all intervals are pairwise disjoint. Coprime factors guarantee this ends.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        if (roots[i].factor == roots[j].factor) continue;
        if (!overlaps(roots[i].where, roots[j].where)) continue;
        if (roots[i].where.exact() && roots[j].where.exact())
          throw DomainError("internal error: coprime factors share a root");
        auto& wider = (roots[i].where.hi - roots[i].where.lo) >= (roots[j].where.hi - roots[j].where.lo) ? roots[i]
                                                                                                          : roots[j];
        const auto& f = parts[wider.factor].factor;
        wider.where = refine_interval(f, wider.where, (wider.where.hi - wider.where.lo) / 2);
        changed = true;
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRootInfo& a, const RealRootInfo& b) { return a.where.lo < b.where.lo; });
  return roots;
}

MultiplicityVector multiplicity_vector(const MonicPolynomial& p) {
  std::vector<int> parts;
  for (const auto& r : ordered_real_roots(p.to_polynomial())) parts.push_back(r.multiplicity);
  return MultiplicityVector(std::move(parts));
}

// ---------------------------------------------------------------------------
// Resultants

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  det.canonicalize();
  return det;
}

Rational resultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of a zero polynomial is undefined");
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0 && n == 0) return Rational(1);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  auto pd = p.descending();
  auto qd = q.descending();
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = pd[static_cast<std::size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = qd[static_cast<std::size_t>(k)];
  return determinant(std::move(s));
}

MonicPolynomial expand_from_roots(const ExactRootConfiguration& cfg) {
  cfg.validate();
  if (cfg.degree() < 1) throw DomainError("configuration must describe at least one root");
  Polynomial p = Polynomial::constant(Rational(1));
  for (const auto& r : cfg.real_roots) p = p * pow(Polynomial::linear(r.y), static_cast<unsigned>(r.mult));
  for (const auto& c : cfg.complex_pairs)
    p = p * Polynomial({Rational(c.alpha * c.alpha + c.beta * c.beta), Rational(-2 * c.alpha), Rational(1)});
  return MonicPolynomial::from_polynomial(p);
}

}  // namespace strata::polycore
