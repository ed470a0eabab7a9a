// Symbolic check of the cofactor cancellation in the weighted Vandermonde
// Jacobian: with x_nu := x_mu the columns mu and nu become proportional and
// m_mu A_{u,mu} + m_nu A_{u,nu} vanishes identically.

#include <map>
#include <vector>

#include "strata/geomkit.hpp"

namespace strata::geomkit {

namespace {

// Sparse multivariate polynomial over Q: exponent vector -> coefficient.
class MPoly {
 public:
  using Monomial = std::vector<int>;

  MPoly() = default;
  static MPoly term(const Rational& c, Monomial m) {
    MPoly p;
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) {
      auto& slot = terms_[m];
      slot += c;
      if (slot == 0) terms_.erase(m);
    }
    return *this;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma.size());
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
        out += term(ca * cb, std::move(m));
      }
    return out;
  }

  MPoly scaled(const Rational& k) const {
    MPoly out;
    for (const auto& [m, c] : terms_) out += term(c * k, m);
    return out;
  }

 private:
  std::map<Monomial, Rational> terms_;
};

using SymMatrix = std::vector<std::vector<MPoly>>;

MPoly det(const SymMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::term(Rational(1), {});
  if (n == 1) return m[0][0];
  MPoly total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    SymMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    MPoly term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : term.scaled(Rational(-1));
  }
  return total;
}

MPoly cofactor(const SymMatrix& m, std::size_t u, std::size_t i) {
  SymMatrix minor;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == u) continue;
    std::vector<MPoly> row;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != i) row.push_back(m[r][c]);
    minor.push_back(std::move(row));
  }
  MPoly d = det(minor);
  return ((u + i) % 2 == 0) ? d : d.scaled(Rational(-1));
}

}  // namespace

CofactorIdentity cofactor_cancellation(std::span<const int> weights, int mu, int nu, int u) {
  const int N = static_cast<int>(weights.size());
  if (N < 2 || N > 7) throw DomainError("symbolic cofactor check supports 2..7 parameters");
  if (mu < 1 || nu < 1 || mu > N || nu > N || mu == nu || u < 1 || u > N)
    throw DomainError("cofactor identity indices out of range");
  // Variable of column i; column nu reuses the variable of column mu.
  auto var = [&](int i) { return i == nu - 1 ? mu - 1 : i; };
  SymMatrix m(static_cast<std::size_t>(N), std::vector<MPoly>(static_cast<std::size_t>(N)));
  for (int j = 1; j <= N; ++j)
    for (int i = 0; i < N; ++i) {
      std::vector<int> mono(static_cast<std::size_t>(N), 0);
      mono[static_cast<std::size_t>(var(i))] = j - 1;
      m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] =
          MPoly::term(Rational(j * weights[static_cast<std::size_t>(i)]), std::move(mono));
    }
  const auto uu = static_cast<std::size_t>(u - 1);
  MPoly a_mu = cofactor(m, uu, static_cast<std::size_t>(mu - 1));
  MPoly a_nu = cofactor(m, uu, static_cast<std::size_t>(nu - 1));
  MPoly combo = a_mu.scaled(Rational(weights[static_cast<std::size_t>(mu - 1)]));
  combo += a_nu.scaled(Rational(weights[static_cast<std::size_t>(nu - 1)]));
  return {combo.is_zero(), !a_mu.is_zero() && !a_nu.is_zero()};
}

}  // namespace strata::geomkit
