#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gtl/coxeter_graph.hpp"
#include "gtl/errors.hpp"

namespace gtl {

using Word = std::vector<Gen>;
using GenMask = std::uint32_t;

enum class Side { left, right };

/// Handle to a group element. Ids are only meaningful inside the owning CoxeterGroup.
struct Element {
  std::uint32_t id = 0;
  friend bool operator==(Element a, Element b) { return a.id == b.id; }
  friend bool operator!=(Element a, Element b) { return a.id != b.id; }
  friend bool operator<(Element a, Element b) { return a.id < b.id; }
};

enum class Classification { fully_commutative, weakly_complex, complex_other };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::fully_commutative: return "fully_commutative";
    case Classification::weakly_complex: return "weakly_complex";
    default: return "complex_other";
  }
}

/// w = w1 w2 w3 with w1 commuting with s and w2 = t s t ... of length m(s,t) - 1.
struct FcPrefix {
  Element w1, w2, w3;
  Gen t = 0;
};

/// Left: w = parabolic * minimal. Right: w = minimal * parabolic.
struct CosetDecomposition {
  Element parabolic;
  Element minimal;
};

enum class EnumFilter { all, fully_commutative };

inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i] + 1);
  }
  return s;
}

/// Parse "e" or space separated 1-based generator indices.
inline Word parse_word(std::string_view text, int rank) {
  std::istringstream in{std::string(text)};
  Word w;
  std::string tok;
  bool ident = false;
  while (in >> tok) {
    if (tok == "e" || tok == "1_W") {
      ident = true;
      continue;
    }
    int g = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError("bad generator '" + tok + "'");
      g = g * 10 + (c - '0');
      if (g > kMaxRank) break;
    }
    if (g < 1 || g > rank) throw ParseError("generator out of range: " + tok);
    w.push_back(g - 1);
  }
  if (ident && !w.empty()) throw ParseError("'e' mixed with generators");
  if (!ident && w.empty()) throw ParseError("empty word");
  return w;
}

/**
 * Coxeter group with a lazily grown element table.
 *
 * Every element is stored with its full set of reduced words, obtained by
 * closing one reduced word under braid and commutation moves. The canonical
 * word is the ShortLex-least of them. All caches are filled under a lock.
 */
class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultClosureCap = 200000;

  explicit CoxeterGroup(CoxeterGraph graph, std::size_t closure_cap = kDefaultClosureCap)
      : graph_(std::move(graph)), cap_(closure_cap) {
    make_node({Word{}});
  }

  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CoxeterGraph& graph() const { return graph_; }
  int rank() const { return graph_.rank(); }
  std::size_t known_elements() const {
    std::lock_guard lk(mu_);
    return nodes_.size();
  }

  Element identity() const { return Element{0}; }
  Element generator(Gen s) const { return mul_right(identity(), s); }

  Element normal_form(const Word& word) const {
    Element e = identity();
    for (Gen s : word) {
      if (s < 0 || s >= rank()) throw PreconditionError("generator out of range");
      e = mul_right(e, s);
    }
    return e;
  }

  bool is_reduced(const Word& word) const { return length(normal_form(word)) == static_cast<int>(word.size()); }

  const Word& word(Element w) const {
    std::lock_guard lk(mu_);
    return nodes_[w.id].reduced.front();
  }
  std::string format(Element w) const { return format_word(word(w)); }

  const std::vector<Word>& reduced_words(Element w) const {
    std::lock_guard lk(mu_);
    return nodes_[w.id].reduced;
  }

  int length(Element w) const {
    std::lock_guard lk(mu_);
    return static_cast<int>(nodes_[w.id].reduced.front().size());
  }

  GenMask descent_mask(Element w, Side side) const {
    std::lock_guard lk(mu_);
    return side == Side::left ? nodes_[w.id].left : nodes_[w.id].right;
  }
  bool has_descent(Element w, Gen s, Side side) const { return (descent_mask(w, side) >> s) & 1u; }
  std::vector<Gen> descents(Element w, Side side) const { return mask_to_gens(descent_mask(w, side)); }

  bool is_fully_commutative(Element w) const {
    std::lock_guard lk(mu_);
    return nodes_[w.id].fc;
  }

  Element mul(Element w, Gen s, Side side) const { return side == Side::left ? mul_left(s, w) : mul_right(w, s); }

  // w * s
  Element mul_right(Element w, Gen s) const {
    std::lock_guard lk(mu_);
    return mul_unlocked(w.id, s, Side::right);
  }

  // s * w
  Element mul_left(Gen s, Element w) const {
    std::lock_guard lk(mu_);
    return mul_unlocked(w.id, s, Side::left);
  }

  Element mul(Element x, Element y) const {
    Element r = x;
    for (Gen s : word(y)) r = mul_right(r, s);
    return r;
  }

  Element inverse(Element w) const {
    {
      std::lock_guard lk(mu_);
      if (nodes_[w.id].inverse >= 0) return Element{static_cast<std::uint32_t>(nodes_[w.id].inverse)};
    }
    Word r = word(w);
    std::reverse(r.begin(), r.end());
    Element inv = normal_form(r);
    std::lock_guard lk(mu_);
    nodes_[w.id].inverse = static_cast<std::int64_t>(inv.id);
    nodes_[inv.id].inverse = static_cast<std::int64_t>(w.id);
    return inv;
  }

  bool shortlex_less(Element a, Element b) const { return gtl::shortlex_less(word(a), word(b)); }

  // x <= w in Bruhat order
  bool bruhat_leq(Element x, Element w) const {
    int lx = length(x), lw = length(w);
    if (lx > lw) return false;
    if (lx == lw) return x == w;
    if (x == identity()) return true;
    std::uint64_t key = (static_cast<std::uint64_t>(x.id) << 32) | w.id;
    {
      std::lock_guard lk(mu_);
      if (auto it = bruhat_.find(key); it != bruhat_.end()) return it->second;
    }
    Gen s = std::countr_zero(descent_mask(w, Side::left));
    Element sw = mul_left(s, w);
    bool r = has_descent(x, s, Side::left) ? bruhat_leq(mul_left(s, x), sw) : bruhat_leq(x, sw);
    std::lock_guard lk(mu_);
    bruhat_.emplace(key, r);
    return r;
  }

  Classification classify(Element w) const {
    if (is_fully_commutative(w)) return Classification::fully_commutative;
    for (Gen s : descents(w, Side::left))
      if (is_fully_commutative(mul_left(s, w))) return Classification::weakly_complex;
    return Classification::complex_other;
  }

  /// Requires w FC, sw > w and sw not FC.
  FcPrefix decompose_fc_prefix(Element w, Gen s) const {
    if (!is_fully_commutative(w) || has_descent(w, s, Side::left) || is_fully_commutative(mul_left(s, w)))
      throw PreconditionError("decompose_fc_prefix needs FC w with sw > w and sw not FC");
    for (const Word& u : reduced_words(w)) {
      std::size_t k = 0;
      while (k < u.size() && u[k] != s && graph_.commute(s, u[k])) ++k;
      if (k >= u.size() || u[k] == s) continue;
      Gen t = u[k];
      int m = graph_.bond(s, t);
      if (m == kInf) continue;
      std::size_t len = static_cast<std::size_t>(m - 1);
      if (k + len > u.size()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < len && ok; ++i) ok = u[k + i] == (i % 2 == 0 ? t : s);
      if (!ok) continue;
      FcPrefix out;
      out.w1 = normal_form(Word(u.begin(), u.begin() + k));
      out.w2 = normal_form(Word(u.begin() + k, u.begin() + k + len));
      out.w3 = normal_form(Word(u.begin() + k + len, u.end()));
      out.t = t;
      return out;
    }
    throw ConsistencyError("no FC prefix decomposition found for " + format(w));
  }

  CosetDecomposition coset_decompose(Element w, GenMask parabolic, Side side) const {
    if (side == Side::right) {
      CosetDecomposition l = coset_decompose(inverse(w), parabolic, Side::left);
      return {inverse(l.parabolic), inverse(l.minimal)};
    }
    Element rest = w;
    Word stripped;
    for (;;) {
      GenMask d = descent_mask(rest, Side::left) & parabolic;
      if (!d) break;
      Gen s = std::countr_zero(d);
      stripped.push_back(s);
      rest = mul_left(s, rest);
    }
    return {normal_form(stripped), rest};
  }

  /// Elements of length <= bound in length-then-ShortLex order.
  std::vector<Element> enumerate(int bound, EnumFilter filter = EnumFilter::all,
                                 std::size_t cap = 1000000) const {
    std::vector<Element> out{identity()};
    std::vector<Element> level{identity()};
    for (int len = 1; len <= bound && !level.empty(); ++len) {
      std::set<std::uint32_t> seen;
      std::vector<Element> next;
      for (Element w : level) {
        GenMask r = descent_mask(w, Side::right);
        for (Gen s = 0; s < rank(); ++s) {
          if ((r >> s) & 1u) continue;
          Element ws = mul_right(w, s);
          if (filter == EnumFilter::fully_commutative && !is_fully_commutative(ws)) continue;
          if (seen.insert(ws.id).second) next.push_back(ws);
        }
      }
      std::sort(next.begin(), next.end(), [&](Element a, Element b) { return shortlex_less(a, b); });
      out.insert(out.end(), next.begin(), next.end());
      if (out.size() > cap) throw CapExceeded("enumeration exceeded " + std::to_string(cap) + " elements");
      level = std::move(next);
    }
    return out;
  }

  static std::vector<Gen> mask_to_gens(GenMask m) {
    std::vector<Gen> out;
    for (Gen s = 0; m; ++s, m >>= 1)
      if (m & 1u) out.push_back(s);
    return out;
  }

  bool is_commuting_product(Element w) const {
    const Word& u = word(w);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j)
        if (u[i] == u[j] || !graph_.commute(u[i], u[j])) return false;
    return true;
  }

 private:
  struct Node {
    std::vector<Word> reduced;  // sorted, front() is canonical
    GenMask left = 0, right = 0;
    bool fc = true;
    std::vector<std::int64_t> lmul, rmul;
    std::int64_t inverse = -1;
  };

  struct WordHash {
    std::size_t operator()(const Word& w) const {
      std::size_t h = w.size();
      for (Gen g : w) h = h * 131 + static_cast<std::size_t>(g) + 1;
      return h;
    }
  };

  // does u contain an alternating factor s t s ... of length m(s,t) >= 3 at position i?
  bool braid_at(const Word& u, std::size_t i) const {
    if (i + 1 >= u.size()) return false;
    Gen a = u[i], b = u[i + 1];
    if (a == b) return false;
    int m = graph_.bond(a, b);
    if (m < 3 || m == kInf || i + m > u.size()) return false;
    for (int k = 2; k < m; ++k)
      if (u[i + k] != (k % 2 == 0 ? a : b)) return false;
    return true;
  }

  std::vector<Word> closure(std::vector<Word> seeds) const {
    std::unordered_set<Word, WordHash> seen(seeds.begin(), seeds.end());
    std::vector<Word> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
      Word u = std::move(todo.back());
      todo.pop_back();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        Gen a = u[i], b = u[i + 1];
        if (a == b) throw ConsistencyError("closure reached a non-reduced word");
        Word v;
        if (graph_.commute(a, b)) {
          v = u;
          std::swap(v[i], v[i + 1]);
        } else if (braid_at(u, i)) {
          v = u;
          int m = graph_.bond(a, b);
          for (int k = 0; k < m; ++k) v[i + k] = (k % 2 == 0 ? b : a);
        } else {
          continue;
        }
        if (seen.insert(v).second) {
          if (seen.size() > cap_)
            throw CapExceeded("reduced word closure exceeded " + std::to_string(cap_) + " words");
          todo.push_back(std::move(v));
        }
      }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint32_t make_node(std::vector<Word> words) const {
    auto it = index_.find(words.front());
    if (it != index_.end()) return it->second;
    Node n;
    n.reduced = std::move(words);
    for (const Word& u : n.reduced) {
      if (u.empty()) continue;
      n.left |= 1u << u.front();
      n.right |= 1u << u.back();
      for (std::size_t i = 0; i + 1 < u.size() && n.fc; ++i)
        if (braid_at(u, i)) n.fc = false;
    }
    n.lmul.assign(static_cast<std::size_t>(rank()), -1);
    n.rmul.assign(static_cast<std::size_t>(rank()), -1);
    auto id = static_cast<std::uint32_t>(nodes_.size());
    index_.emplace(n.reduced.front(), id);
    nodes_.push_back(std::move(n));
    return id;
  }

  Element mul_unlocked(std::uint32_t w, Gen s, Side side) const {
    auto& cache = side == Side::left ? nodes_[w].lmul : nodes_[w].rmul;
    if (cache[s] >= 0) return Element{static_cast<std::uint32_t>(cache[s])};
    const Node& n = nodes_[w];
    GenMask d = side == Side::left ? n.left : n.right;
    std::vector<Word> words;
    if ((d >> s) & 1u) {
      for (const Word& u : n.reduced) {
        if (side == Side::left && u.front() == s) words.emplace_back(u.begin() + 1, u.end());
        if (side == Side::right && u.back() == s) words.emplace_back(u.begin(), u.end() - 1);
      }
      std::sort(words.begin(), words.end());
    } else {
      std::vector<Word> seeds;
      seeds.reserve(n.reduced.size());
      for (const Word& u : n.reduced) {
        Word v;
        v.reserve(u.size() + 1);
        if (side == Side::left) v.push_back(s);
        v.insert(v.end(), u.begin(), u.end());
        if (side == Side::right) v.push_back(s);
        seeds.push_back(std::move(v));
      }
      words = closure(std::move(seeds));
    }
    std::uint32_t r = make_node(std::move(words));
    auto& cache2 = side == Side::left ? nodes_[w].lmul : nodes_[w].rmul;
    cache2[s] = r;
    auto& back = side == Side::left ? nodes_[r].lmul : nodes_[r].rmul;
    back[s] = w;
    return Element{r};
  }

  CoxeterGraph graph_;
  std::size_t cap_;
  mutable std::recursive_mutex mu_;
  mutable std::deque<Node> nodes_;
  mutable std::unordered_map<Word, std::uint32_t, WordHash> index_;
  mutable std::unordered_map<std::uint64_t, bool> bruhat_;
};

}  // namespace gtl
