#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

/// Multiplicities of the distinct real roots of a polynomial, listed in the
/// order of the roots on the real line (not sorted by value).
///
/// For parts (r_1, ..., r_q): length l = sum r_j, groups q, surplus r = l - q.
/// Paired with an ambient degree n the remaining n - l roots form (n - l) / 2
/// complex conjugate pairs and the stratum has codimension r.
class MultiplicityVector {
 public:
  MultiplicityVector() = default;
  /// Throws DomainError if some part is < 1.
  explicit MultiplicityVector(std::vector<int> parts);
  MultiplicityVector(std::initializer_list<int> parts) : MultiplicityVector(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const noexcept { return parts_.empty(); }

  int length() const noexcept;
  int groups() const noexcept { return static_cast<int>(parts_.size()); }
  int surplus() const noexcept { return length() - groups(); }

  /// "[3,1,2,1]", "[]" for the empty vector.
  std::string to_string() const;

  /// Accepts "[3,1,2,1]", "3,1,2,1", "[]" and "" (whitespace ignored).
  static MultiplicityVector parse(std::string_view text);

  friend auto operator<=>(const MultiplicityVector&, const MultiplicityVector&) = default;
  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

 private:
  std::vector<int> parts_;
};

/// Deterministic listing order: larger length first, then lexicographic parts.
bool enumeration_less(const MultiplicityVector& a, const MultiplicityVector& b);

}  // namespace strata
