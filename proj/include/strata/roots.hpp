#pragma once

#include <vector>

#include "strata/error.hpp"
#include "strata/mv.hpp"
#include "strata/rational.hpp"

namespace strata {

template <class T>
struct RealRoot {
  T y;
  int mult = 1;
};

/// The conjugate pair alpha +- i*beta, counted once.
template <class T>
struct ComplexPair {
  T alpha;
  T beta;
};

/// Distinct real roots in increasing order with their multiplicities, plus
/// complex conjugate pairs. This is the parameter chart of a stratum: the
/// q real positions and the 2 * |pairs| real coordinates of the pairs.
template <class T>
struct BasicRootConfiguration {
  std::vector<RealRoot<T>> real_roots;
  std::vector<ComplexPair<T>> complex_pairs;

  int degree() const {
    int n = 2 * static_cast<int>(complex_pairs.size());
    for (const auto& r : real_roots) n += r.mult;
    return n;
  }

  /// Number of free real parameters, which is the stratum dimension.
  int parameter_count() const {
    return static_cast<int>(real_roots.size() + 2 * complex_pairs.size());
  }

  MultiplicityVector mv() const {
    std::vector<int> parts;
    parts.reserve(real_roots.size());
    for (const auto& r : real_roots) parts.push_back(r.mult);
    return MultiplicityVector(std::move(parts));
  }

  /// Throws DomainError unless positions strictly increase, multiplicities are
  /// positive and every beta is positive.
  void validate() const {
    for (std::size_t i = 0; i < real_roots.size(); ++i) {
      if (real_roots[i].mult < 1) throw DomainError("root multiplicity must be positive");
      if (i > 0 && !(real_roots[i - 1].y < real_roots[i].y))
        throw DomainError("real root positions must be strictly increasing");
    }
    for (const auto& p : complex_pairs)
      if (!(p.beta > 0)) throw DomainError("complex pair imaginary part must be positive");
  }
};

using RootConfiguration = BasicRootConfiguration<Real>;
using ExactRootConfiguration = BasicRootConfiguration<Rational>;

/// Exact image of a floating configuration (binary floats are dyadic rationals).
inline ExactRootConfiguration to_exact(const RootConfiguration& cfg) {
  ExactRootConfiguration out;
  for (const auto& r : cfg.real_roots) out.real_roots.push_back({exact_rational(r.y), r.mult});
  for (const auto& p : cfg.complex_pairs) out.complex_pairs.push_back({exact_rational(p.alpha), exact_rational(p.beta)});
  return out;
}

}  // namespace strata
