#pragma once

#include <climits>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gtl/errors.hpp"

namespace gtl {

using Gen = int;  // 0-based internally, 1-based in text

inline constexpr int kInf = INT_MAX;  // bond label for m = infinity
inline constexpr int kMaxRank = 32;

/// Coxeter graph stored as the full symmetric matrix of bond labels.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(int rank, std::string name = "custom") : rank_(rank), name_(std::move(name)) {
    if (rank < 1 || rank > kMaxRank) throw PreconditionError("rank must be between 1 and 32");
    m_.assign(static_cast<std::size_t>(rank * rank), 2);
    for (int i = 0; i < rank; ++i) m_[i * rank + i] = 1;
  }

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int bond(Gen s, Gen t) const { return m_[s * rank_ + t]; }
  bool commute(Gen s, Gen t) const { return bond(s, t) <= 2; }

  void set_bond(Gen s, Gen t, int m) {
    if (s == t || s < 0 || t < 0 || s >= rank_ || t >= rank_) throw PreconditionError("bad edge endpoints");
    if (m < 2) throw PreconditionError("bond label must be at least 2");
    m_[s * rank_ + t] = m;
    m_[t * rank_ + s] = m;
  }

  // pairs {s, t} with s < t and m(s,t) >= 3
  std::vector<std::pair<Gen, Gen>> noncommuting_pairs() const {
    std::vector<std::pair<Gen, Gen>> out;
    for (Gen s = 0; s < rank_; ++s)
      for (Gen t = s + 1; t < rank_; ++t)
        if (!commute(s, t)) out.emplace_back(s, t);
    return out;
  }

  // True iff the graph is the path 1 - 2 - ... - n with all labels 3.
  bool is_type_a() const {
    for (Gen s = 0; s < rank_; ++s)
      for (Gen t = s + 1; t < rank_; ++t)
        if (bond(s, t) != (t == s + 1 ? 3 : 2)) return false;
    return true;
  }

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.rank_ == b.rank_ && a.m_ == b.m_;
  }

 private:
  int rank_ = 0;
  std::string name_;
  std::vector<int> m_;
};

namespace detail {

inline CoxeterGraph path_graph(int n, std::string name) {
  CoxeterGraph g(n, std::move(name));
  for (int i = 0; i + 1 < n; ++i) g.set_bond(i, i + 1, 3);
  return g;
}

inline int parse_positive(std::string_view s, std::string_view what) {
  if (s.empty()) throw ParseError("missing " + std::string(what));
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("bad " + std::string(what) + ": " + std::string(s));
    v = v * 10 + (c - '0');
    if (v > 100000) throw ParseError(std::string(what) + " too large");
  }
  return v;
}

}  // namespace detail

/**
 * Named graphs. Accepted names: A<n>, B<n>, D<n>, E6, E7, E8, F4, H3, H4,
 * I2(<m>) with m a number or inf, ~A<n> and ~C<n> for the affine types.
 * Numbering follows Bourbaki, so D4 has node 2 in the centre.
 */
inline CoxeterGraph preset(std::string_view name) {
  const std::string nm(name);
  auto bad = [&] { return ParseError("unknown preset: " + nm); };
  if (nm.empty()) throw bad();
  if (nm.rfind("I2(", 0) == 0 && nm.back() == ')') {
    std::string arg = nm.substr(3, nm.size() - 4);
    int m = arg == "inf" ? kInf : detail::parse_positive(arg, "label");
    if (m < 2) throw bad();
    CoxeterGraph g(2, nm);
    g.set_bond(0, 1, m);
    return g;
  }
  bool affine = nm[0] == '~';
  std::string body = affine ? nm.substr(1) : nm;
  if (body.size() < 2) throw bad();
  char type = body[0];
  int n = detail::parse_positive(body.substr(1), "rank");
  if (affine) {
    if (type == 'A' && n >= 1) {
      if (n == 1) {
        CoxeterGraph g(2, nm);
        g.set_bond(0, 1, kInf);
        return g;
      }
      CoxeterGraph g = detail::path_graph(n + 1, nm);
      g.set_bond(n, 0, 3);
      return g;
    }
    if (type == 'C' && n >= 1) {
      if (n == 1) {
        CoxeterGraph g(2, nm);
        g.set_bond(0, 1, kInf);
        return g;
      }
      CoxeterGraph g = detail::path_graph(n + 1, nm);
      g.set_bond(0, 1, 4);
      g.set_bond(n - 1, n, 4);
      return g;
    }
    throw bad();
  }
  switch (type) {
    case 'A':
      if (n >= 1) return detail::path_graph(n, nm);
      break;
    case 'B':
      if (n >= 2) {
        CoxeterGraph g = detail::path_graph(n, nm);
        g.set_bond(n - 2, n - 1, 4);
        return g;
      }
      break;
    case 'D':
      if (n >= 4) {
        CoxeterGraph d(n, nm);
        for (int i = 0; i + 2 < n - 1; ++i) d.set_bond(i, i + 1, 3);
        d.set_bond(n - 3, n - 2, 3);
        d.set_bond(n - 3, n - 1, 3);
        return d;
      }
      break;
    case 'E':
      if (n >= 6 && n <= 8) {
        CoxeterGraph g(n, nm);
        g.set_bond(0, 2, 3);
        g.set_bond(1, 3, 3);
        for (int i = 2; i + 1 < n; ++i) g.set_bond(i, i + 1, 3);
        return g;
      }
      break;
    case 'F':
      if (n == 4) {
        CoxeterGraph g = detail::path_graph(4, nm);
        g.set_bond(1, 2, 4);
        return g;
      }
      break;
    case 'H':
      if (n == 3 || n == 4) {
        CoxeterGraph g = detail::path_graph(n, nm);
        g.set_bond(0, 1, 5);
        return g;
      }
      break;
    default:
      break;
  }
  throw bad();
}

/**
 * Parse the graph text format:
 *   rank N
 *   edge i j m      (1-based, m >= 3 or inf)
 *   preset NAME
 * Blank lines and '#' comments are ignored; unlisted pairs get m = 2.
 */
inline CoxeterGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  CoxeterGraph g;
  bool have = false;
  std::vector<char> seen;
  auto fail = [&](const std::string& msg) { return ParseError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "rank") {
      if (tok.size() != 2 || have) throw fail("malformed rank line");
      int r = detail::parse_positive(tok[1], "rank");
      if (r < 1 || r > kMaxRank) throw fail("rank out of range");
      g = CoxeterGraph(r);
      seen.assign(static_cast<std::size_t>(r * r), 0);
      have = true;
    } else if (tok[0] == "preset") {
      if (tok.size() != 2 || have) throw fail("malformed preset line");
      g = preset(tok[1]);
      seen.assign(static_cast<std::size_t>(g.rank() * g.rank()), 0);
      have = true;
    } else if (tok[0] == "edge") {
      if (!have) throw fail("edge before rank");
      if (tok.size() != 4) throw fail("malformed edge line");
      int i = detail::parse_positive(tok[1], "node") - 1;
      int j = detail::parse_positive(tok[2], "node") - 1;
      if (i < 0 || j < 0 || i >= g.rank() || j >= g.rank() || i == j) throw fail("edge endpoint out of range");
      int m = tok[3] == "inf" ? kInf : detail::parse_positive(tok[3], "label");
      if (m < 3) throw fail("edge label must be at least 3");
      auto& flag = seen[std::min(i, j) * g.rank() + std::max(i, j)];
      if (flag) throw fail("duplicate edge");
      flag = 1;
      g.set_bond(i, j, m);
    } else {
      throw fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (!have) throw ParseError("graph has no rank or preset line");
  return g;
}

inline std::string bond_text(int m) { return m == kInf ? "inf" : std::to_string(m); }

inline std::string to_string(const CoxeterGraph& g) {
  std::string s = "rank " + std::to_string(g.rank()) + "\n";
  for (auto [a, b] : g.noncommuting_pairs())
    s += "edge " + std::to_string(a + 1) + " " + std::to_string(b + 1) + " " + bond_text(g.bond(a, b)) + "\n";
  return s;
}

}  // namespace gtl
