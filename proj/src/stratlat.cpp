#include "strata/stratlat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <cstdio>

namespace strata::stratlat {

Stratum validate_mv(const std::vector<int>& parts, int n) {
  if (n < 1 || n > kMaxDegree)
    throw InvalidStratum(InvalidStratum::Kind::BadDegree,
                         "degree must lie in [1, " + std::to_string(kMaxDegree) + "], got " + std::to_string(n));
  long long length = 0;
  for (int p : parts) {
    if (p < 1)
      throw InvalidStratum(InvalidStratum::Kind::NonPositivePart,
                           "multiplicity vector parts must be positive, got " + std::to_string(p));
    length += p;
  }
  if (length > n)
    throw InvalidStratum(InvalidStratum::Kind::ExceedsDegree,
                         "multiplicity vector length " + std::to_string(length) + " exceeds degree " + std::to_string(n));
  if ((n - length) % 2 != 0)
    throw InvalidStratum(InvalidStratum::Kind::Parity, "degree minus length must be even (n=" + std::to_string(n) +
                                                           ", l=" + std::to_string(length) + ")");
  return Stratum{MultiplicityVector(parts), n};
}

Stratum validate_mv(const MultiplicityVector& mv, int n) { return validate_mv(mv.vec(), n); }

namespace {

void compositions(int l, std::vector<int>& prefix, std::vector<MultiplicityVector>& out) {
  if (l == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= l; ++first) {
    prefix.push_back(first);
    compositions(l - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Stratum> enumerate_mvs(int n) {
  if (n < 1) throw DomainError("degree must be >= 1");
  std::vector<MultiplicityVector> mvs;
  for (int l = n; l >= 0; l -= 2) {
    std::vector<int> prefix;
    compositions(l, prefix, mvs);
  }
  std::sort(mvs.begin(), mvs.end(), enumeration_less);
  std::vector<Stratum> out;
  out.reserve(mvs.size());
  for (auto& mv : mvs) out.push_back(Stratum{std::move(mv), n});
  return out;
}

std::size_t stratum_count(int n) {
  std::size_t total = 0;
  for (int l = n; l >= 0; l -= 2) total += l == 0 ? 1 : (std::size_t{1} << (l - 1));
  return total;
}

std::vector<MultiplicityVector> type_a_merges(const MultiplicityVector& mv) {
  const int q = mv.groups();
  std::vector<MultiplicityVector> out;
  if (q < 2) return out;
  // Bit k of `keep` set <=> the cut between parts k and k+1 survives.
  const unsigned cuts = static_cast<unsigned>(q - 1);
  const unsigned all = (1u << cuts) - 1u;
  for (unsigned keep = 0; keep < all; ++keep) {
    std::vector<int> parts;
    int acc = mv[0];
    for (unsigned k = 0; k < cuts; ++k) {
      if (keep & (1u << k)) {
        parts.push_back(acc);
        acc = mv[k + 1];
      } else {
        acc += mv[k + 1];
      }
    }
    parts.push_back(acc);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiplicityVector> type_b_results(const MultiplicityVector& mv, int n) {
  if (mv.length() > n - 2)
    throw DomainError("type B needs a complex pair: length " + std::to_string(mv.length()) + " > n - 2");
  std::set<MultiplicityVector> out;
  const auto& v = mv.vec();
  for (std::size_t pos = 0; pos <= v.size(); ++pos) {
    std::vector<int> p(v);
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(pos), 2);
    out.emplace(std::move(p));
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::vector<int> p(v);
    p[k] += 2;
    out.emplace(std::move(p));
  }
  return {out.begin(), out.end()};
}

std::string CoverLabel::to_string() const {
  if (kind == Kind::Split) return "split(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return "delete2(" + std::to_string(i) + ")";
}

CoverLabel CoverLabel::parse(const std::string& text) {
  int a = 0;
  int b = 0;
  if (std::sscanf(text.c_str(), "split(%d,%d)", &a, &b) == 2) return {Kind::Split, a, b};
  if (std::sscanf(text.c_str(), "delete2(%d)", &a) == 1) return {Kind::Delete2, a, 0};
  throw ParseError("invalid cover label '" + text + "'", 0);
}

MultiplicityVector apply(const MultiplicityVector& mv, const CoverLabel& label) {
  const auto& v = mv.vec();
  if (label.i < 1 || label.i > mv.groups()) throw DomainError("cover label index out of range: " + label.to_string());
  const auto idx = static_cast<std::size_t>(label.i - 1);
  std::vector<int> out;
  out.reserve(v.size() + 1);
  out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(idx));
  if (label.kind == CoverLabel::Kind::Split) {
    if (label.j < 1 || label.j >= v[idx]) throw DomainError("invalid split " + label.to_string() + " of " + mv.to_string());
    out.push_back(label.j);
    out.push_back(v[idx] - label.j);
  } else if (v[idx] != 2) {
    throw DomainError("delete2 applies only to a part equal to 2: " + label.to_string() + " of " + mv.to_string());
  }
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(idx) + 1, v.end());
  return MultiplicityVector(std::move(out));
}

std::vector<CoveringRelation> upward_neighbors(const Stratum& s) {
  std::map<MultiplicityVector, std::vector<CoverLabel>, decltype(&enumeration_less)> grouped(&enumeration_less);
  const auto& v = s.mv.vec();
  for (int i = 1; i <= static_cast<int>(v.size()); ++i) {
    const int r = v[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j < r; ++j) {
      CoverLabel label{CoverLabel::Kind::Split, i, j};
      grouped[apply(s.mv, label)].push_back(label);
    }
    if (r == 2) {
      CoverLabel label{CoverLabel::Kind::Delete2, i, 0};
      grouped[apply(s.mv, label)].push_back(label);
    }
  }
  std::vector<CoveringRelation> out;
  for (auto& [mv, labels] : grouped) out.push_back({s, Stratum{mv, s.degree}, std::move(labels)});
  return out;
}

bool in_closure(const Stratum& v1, const Stratum& v2) {
  if (v1.degree != v2.degree) throw DomainError("in_closure needs strata of the same degree");
  const int n = v1.degree;
  if (v1.mv == v2.mv) return true;
  if (v1.mv.length() < v2.mv.length() || v1.dimension() >= v2.dimension()) return false;
  // Breadth-first search over single merges and single type-B steps from v2.
  std::set<MultiplicityVector> seen{v2.mv};
  std::deque<MultiplicityVector> queue{v2.mv};
  while (!queue.empty()) {
    MultiplicityVector cur = std::move(queue.front());
    queue.pop_front();
    std::vector<MultiplicityVector> next;
    const auto& v = cur.vec();
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      std::vector<int> p(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
      p.push_back(v[k] + v[k + 1]);
      p.insert(p.end(), v.begin() + static_cast<std::ptrdiff_t>(k) + 2, v.end());
      next.emplace_back(std::move(p));
    }
    if (cur.length() <= n - 2)
      for (auto& m : type_b_results(cur, n)) next.push_back(std::move(m));
    for (auto& m : next) {
      if (m == v1.mv) return true;
      if (m.length() > v1.mv.length()) continue;
      if (seen.insert(m).second) queue.push_back(std::move(m));
    }
  }
  return false;
}

StratumPoset build_poset(int n) {
  StratumPoset poset;
  poset.degree = n;
  poset.nodes = enumerate_mvs(n);
  for (const auto& s : poset.nodes)
    for (auto& c : upward_neighbors(s)) poset.covers.push_back(std::move(c));
  return poset;
}

std::string to_dot(const StratumPoset& poset) {
  std::map<MultiplicityVector, std::size_t> id;
  for (std::size_t k = 0; k < poset.nodes.size(); ++k) id[poset.nodes[k].mv] = k;
  std::string out = "digraph strata_n" + std::to_string(poset.degree) + " {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
    const auto& s = poset.nodes[k];
    out += "  s" + std::to_string(k) + " [label=\"" + s.mv.to_string() + " dim=" + std::to_string(s.dimension()) +
           "\"];\n";
  }
  for (const auto& c : poset.covers) {
    std::string labels;
    for (std::size_t k = 0; k < c.labels.size(); ++k) labels += (k ? " " : "") + c.labels[k].to_string();
    out += "  s" + std::to_string(id.at(c.lower.mv)) + " -> s" + std::to_string(id.at(c.upper.mv)) + " [label=\"" +
           labels + "\"];\n";
  }
  out += "}\n";
  return out;
}

nlohmann::json to_json(const StratumPoset& poset) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& s : poset.nodes)
    nodes.push_back({{"mv", s.mv.vec()}, {"dim", s.dimension()}, {"codim", s.codimension()}});
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& c : poset.covers) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& l : c.labels) labels.push_back(l.to_string());
    covers.push_back({{"lower", c.lower.mv.vec()}, {"upper", c.upper.mv.vec()}, {"labels", labels}});
  }
  return {{"degree", poset.degree}, {"nodes", nodes}, {"covers", covers}};
}

}  // namespace strata::stratlat
