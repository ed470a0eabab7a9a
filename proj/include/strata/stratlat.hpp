#pragma once

// Combinatorics of the multiplicity-vector stratification of monic degree-n
// polynomials: enumeration, type A / type B operations, covering relations
// and the closure order.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "strata/error.hpp"
#include "strata/mv.hpp"

namespace strata::stratlat {

/// Upper bound on the ambient degree accepted by validate_mv.
inline constexpr int kMaxDegree = 64;

struct Stratum {
  MultiplicityVector mv;
  int degree = 0;

  int codimension() const noexcept { return mv.surplus(); }
  int dimension() const noexcept { return degree - mv.surplus(); }
  int complex_pairs() const noexcept { return (degree - mv.length()) / 2; }
  std::string to_string() const { return mv.to_string() + " n=" + std::to_string(degree); }

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

class InvalidStratum : public DomainError {
 public:
  enum class Kind { BadDegree, NonPositivePart, ExceedsDegree, Parity };
  InvalidStratum(Kind kind, const std::string& what) : DomainError(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Accepts iff every part >= 1, sum <= n and n - sum is even.
Stratum validate_mv(const std::vector<int>& parts, int n);
Stratum validate_mv(const MultiplicityVector& mv, int n);

inline int surplus(const MultiplicityVector& mv) { return mv.surplus(); }
inline int dimension(const Stratum& s) { return s.dimension(); }

/// All strata for degree n in enumeration order (length desc, then lexicographic).
std::vector<Stratum> enumerate_mvs(int n);

/// Sum over admissible lengths l of the number of compositions of l.
std::size_t stratum_count(int n);

/// All vectors obtained by merging one or more groups of consecutive parts.
std::vector<MultiplicityVector> type_a_merges(const MultiplicityVector& mv);

/// All vectors obtained by one type-B step: insert a part 2 anywhere or add 2
/// to one part. Throws DomainError if no complex pair is left (length > n - 2).
std::vector<MultiplicityVector> type_b_results(const MultiplicityVector& mv, int n);

/// split(i, j): part r_i replaced by (j, r_i - j); delete2(i): part r_i = 2 removed.
/// Indices are 1-based.
struct CoverLabel {
  enum class Kind { Split, Delete2 };
  Kind kind;
  int i;
  int j = 0;

  std::string to_string() const;
  static CoverLabel parse(const std::string& text);
  friend bool operator==(const CoverLabel&, const CoverLabel&) = default;
};

MultiplicityVector apply(const MultiplicityVector& mv, const CoverLabel& label);

/// `lower` lies in the closure of `upper` and dim(upper) = dim(lower) + 1.
struct CoveringRelation {
  Stratum lower;
  Stratum upper;
  std::vector<CoverLabel> labels;
};

/// Covers with `s` as lower element, one per distinct upper MV, all labels kept.
std::vector<CoveringRelation> upward_neighbors(const Stratum& s);

/// True iff v1 lies in the closure of v2 (reflexive).
bool in_closure(const Stratum& v1, const Stratum& v2);

struct StratumPoset {
  int degree = 0;
  std::vector<Stratum> nodes;
  std::vector<CoveringRelation> covers;
};

StratumPoset build_poset(int n);

/// DOT digraph, edges lower -> upper.
std::string to_dot(const StratumPoset& poset);
nlohmann::json to_json(const StratumPoset& poset);

}  // namespace strata::stratlat
