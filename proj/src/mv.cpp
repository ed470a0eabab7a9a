#include "strata/mv.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "strata/error.hpp"

namespace strata {

MultiplicityVector::MultiplicityVector(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw DomainError("multiplicity vector parts must be positive, got " + std::to_string(p));
}

int MultiplicityVector::length() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string MultiplicityVector::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

MultiplicityVector MultiplicityVector::parse(std::string_view text) {
  std::string compact;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    compact += text[i];
    where.push_back(i);
  }
  std::size_t begin = 0;
  std::size_t end = compact.size();
  if (!compact.empty() && compact.front() == '[') {
    if (compact.back() != ']') throw ParseError("unterminated '['", text.size());
    begin = 1;
    end = compact.size() - 1;
  } else if (!compact.empty() && compact.back() == ']') {
    throw ParseError("unexpected ']'", where.back());
  }
  std::vector<int> parts;
  std::size_t pos = begin;
  while (pos < end) {
    std::size_t comma = compact.find(',', pos);
    if (comma == std::string::npos || comma > end) comma = end;
    int value = 0;
    auto [ptr, ec] = std::from_chars(compact.data() + pos, compact.data() + comma, value);
    if (ec != std::errc{} || ptr != compact.data() + comma || comma == pos)
      throw ParseError("invalid multiplicity", pos < where.size() ? where[pos] : text.size());
    if (value < 1) throw ParseError("multiplicities must be positive", where[pos]);
    parts.push_back(value);
    pos = comma + 1;
    if (comma + 1 == end && comma != end) throw ParseError("trailing ','", where[comma]);
  }
  return MultiplicityVector(std::move(parts));
}

bool enumeration_less(const MultiplicityVector& a, const MultiplicityVector& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.vec() < b.vec();
}

}  // namespace strata
