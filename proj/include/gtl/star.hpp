#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtl/coxeter_group.hpp"
#include "gtl/report.hpp"

namespace gtl {

/// A noncommuting pair {s, t} and a side.
struct StarContext {
  Gen s = 0, t = 0;
  Side side = Side::left;
};

enum class StarDir { up, down };

/// Position of w relative to the parabolic subgroup <s,t> on one side.
enum class StringCase { minimal, longest, s_string, t_string };

struct StringPosition {
  StringCase kind;
  Element parabolic;  // w_I on the left, _I w on the right
  Element minimal;
};

inline StringPosition string_position(const CoxeterGroup& g, Element w, StarContext ctx) {
  GenMask I = (1u << ctx.s) | (1u << ctx.t);
  CosetDecomposition d = g.coset_decompose(w, I, ctx.side);
  int k = g.length(d.parabolic);
  int m = g.graph().bond(ctx.s, ctx.t);
  StringPosition p{StringCase::minimal, d.parabolic, d.minimal};
  if (k == 0) return p;
  if (m != kInf && k == m) {
    p.kind = StringCase::longest;
    return p;
  }
  // the letter next to the coset representative fixes the string
  const Word& u = g.word(d.parabolic);
  Gen adj = ctx.side == Side::left ? u.back() : u.front();
  p.kind = adj == ctx.s ? StringCase::s_string : StringCase::t_string;
  return p;
}

/// One step along the {s,t}-string containing w; nullopt when w is not on a
/// string or the step leaves it.
inline std::optional<Element> star(const CoxeterGroup& g, Element w, StarContext ctx, StarDir dir) {
  if (g.graph().commute(ctx.s, ctx.t)) throw PreconditionError("star needs a noncommuting pair");
  StringPosition p = string_position(g, w, ctx);
  if (p.kind == StringCase::minimal || p.kind == StringCase::longest) return std::nullopt;
  int k = g.length(p.parabolic);
  int m = g.graph().bond(ctx.s, ctx.t);
  const Word& u = g.word(p.parabolic);
  Gen outer = ctx.side == Side::left ? u.front() : u.back();
  Gen other = outer == ctx.s ? ctx.t : ctx.s;
  if (dir == StarDir::down) {
    if (k - 1 < 1) return std::nullopt;
    return g.mul(w, outer, ctx.side);
  }
  if (m != kInf && k + 1 > m - 1) return std::nullopt;
  return g.mul(w, other, ctx.side);
}

/// All elements reachable from w by a single downward star operation.
inline std::vector<Element> star_reduction_paths(const CoxeterGroup& g, Element w) {
  std::vector<Element> out;
  for (auto [s, t] : g.graph().noncommuting_pairs())
    for (Side side : {Side::left, Side::right})
      if (auto x = star(g, w, {s, t, side}, StarDir::down))
        if (std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
  std::sort(out.begin(), out.end(), [&](Element a, Element b) { return g.shortlex_less(a, b); });
  return out;
}

namespace detail {

template <class Goal>
bool star_reaches(const CoxeterGroup& g, Element w, Goal&& goal, std::map<std::uint32_t, bool>& memo) {
  if (auto it = memo.find(w.id); it != memo.end()) return it->second;
  bool ok = goal(w);
  if (!ok)
    for (Element x : star_reduction_paths(g, w))
      if (star_reaches(g, x, goal, memo)) {
        ok = true;
        break;
      }
  memo[w.id] = ok;
  return ok;
}

inline bool has_noncommuting_pair(const CoxeterGraph& gr, GenMask m) {
  for (Gen s = 0; s < gr.rank(); ++s)
    for (Gen t = s + 1; t < gr.rank(); ++t)
      if (((m >> s) & 1u) && ((m >> t) & 1u) && !gr.commute(s, t)) return true;
  return false;
}

}  // namespace detail

/// Every FC element of length <= bound star-reduces to a product of commuting generators.
inline Report check_property_F(const CoxeterGroup& g, int bound) {
  Report r{"F", g.graph().name(), bound, {}};
  Check& c = r.add("F");
  std::map<std::uint32_t, bool> memo;
  auto goal = [&](Element x) { return g.is_commuting_product(x); };
  for (Element w : g.enumerate(bound, EnumFilter::fully_commutative))
    if (!detail::star_reaches(g, w, goal, memo)) c.failures.push_back(g.format(w));
  return r;
}

/// Every non-FC element of length <= bound star-reduces to an element with a
/// noncommuting pair in its left or right descent set.
inline Report check_property_S(const CoxeterGroup& g, int bound) {
  Report r{"S", g.graph().name(), bound, {}};
  Check& c = r.add("S");
  std::map<std::uint32_t, bool> memo;
  auto goal = [&](Element x) {
    return detail::has_noncommuting_pair(g.graph(), g.descent_mask(x, Side::left)) ||
           detail::has_noncommuting_pair(g.graph(), g.descent_mask(x, Side::right));
  };
  for (Element w : g.enumerate(bound))
    if (!g.is_fully_commutative(w) && !detail::star_reaches(g, w, goal, memo)) c.failures.push_back(g.format(w));
  return r;
}

/**
 * Four-term string recurrence
 *   f(_*x, w) + f(^*x, w) = f(x, _*w) + f(x, ^*w)
 * for left stars, over all x, w in `elems` lying on {s,t}-strings with
 * different left descents in {s,t}. Undefined arguments contribute 0.
 * Returns "x | w | s t" for each failing instance.
 */
template <class F>
std::vector<std::string> string_recurrence_failures(const CoxeterGroup& g, const std::vector<Element>& elems, F&& f,
                                                    std::size_t* instances = nullptr) {
  std::vector<std::string> out;
  std::size_t count = 0;
  for (auto [s, t] : g.graph().noncommuting_pairs()) {
    GenMask I = (1u << s) | (1u << t);
    StarContext ctx{s, t, Side::left};
    auto on_string = [&](Element x) { return std::popcount(g.descent_mask(x, Side::left) & I) == 1; };
    auto val = [&](std::optional<Element> a, std::optional<Element> b) -> long long {
      return a && b ? static_cast<long long>(f(*a, *b)) : 0;
    };
    for (Element x : elems) {
      if (!on_string(x)) continue;
      auto xd = star(g, x, ctx, StarDir::down), xu = star(g, x, ctx, StarDir::up);
      for (Element w : elems) {
        if (!on_string(w) || (g.descent_mask(x, Side::left) & I) == (g.descent_mask(w, Side::left) & I)) continue;
        ++count;
        auto wd = star(g, w, ctx, StarDir::down), wu = star(g, w, ctx, StarDir::up);
        if (val(xd, w) + val(xu, w) != val(x, wd) + val(x, wu))
          out.push_back(g.format(x) + " | " + g.format(w) + " | " + std::to_string(s + 1) + " " + std::to_string(t + 1));
      }
    }
  }
  if (instances) *instances = count;
  return out;
}

/// Largest number of pairwise commuting letters in a factor of some reduced word.
inline int n_stat(const CoxeterGroup& g, Element w) {
  if (!g.is_fully_commutative(w)) throw PreconditionError("n_stat needs an FC element");
  int best = 0;
  for (const Word& u : g.reduced_words(w)) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      std::size_t j = i;
      for (; j < u.size(); ++j) {
        bool ok = true;
        for (std::size_t k = i; k < j && ok; ++k) ok = g.graph().commute(u[k], u[j]) && u[k] != u[j];
        if (!ok) break;
      }
      best = std::max(best, static_cast<int>(j - i));
    }
  }
  return best;
}

/// 0/1 colouring with adjacent generators coloured differently, or nullopt.
/// Each component is explored breadth first from its smallest generator, which gets colour 0.
inline std::optional<std::vector<int>> bipartite_coloring(const CoxeterGraph& gr) {
  std::vector<int> col(static_cast<std::size_t>(gr.rank()), -1);
  for (Gen root = 0; root < gr.rank(); ++root) {
    if (col[root] >= 0) continue;
    col[root] = 0;
    std::vector<Gen> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Gen a = queue[h];
      for (Gen b = 0; b < gr.rank(); ++b) {
        if (a == b || gr.commute(a, b)) continue;
        if (col[b] < 0) {
          col[b] = 1 - col[a];
          queue.push_back(b);
        } else if (col[b] == col[a]) {
          return std::nullopt;
        }
      }
    }
  }
  return col;
}

/// (-1)^{|L(w) in colour 0|} * (-1)^{|R(w) in colour 0|}
inline int k_epsilon(const CoxeterGroup& g, Element w, const std::vector<int>& coloring) {
  int n = 0;
  for (Side side : {Side::left, Side::right})
    for (Gen s : g.descents(w, side))
      if (coloring[s] == 0) ++n;
  return n % 2 == 0 ? 1 : -1;
}

}  // namespace gtl
