#pragma once

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtl/bar_solve.hpp"
#include "gtl/combination.hpp"
#include "gtl/coxeter_group.hpp"
#include "gtl/report.hpp"

namespace gtl {

using Combination = SparseCombination<Element>;

enum class TLBasis { t_tilde, c };
enum class CanonicalAlgorithm { triangular, recursion };

/// Element of TL(X) written in one of its two bases; keys are FC elements.
struct TLElement {
  TLBasis basis = TLBasis::t_tilde;
  Combination coords;

  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.basis == b.basis && a.coords == b.coords;
  }
};

inline LaurentPoly v_minus_vinv() { return LaurentPoly::v(1) - LaurentPoly::v(-1); }

inline int epsilon(const CoxeterGroup& g, Element w) { return g.length(w) % 2 == 0 ? 1 : -1; }

// coefficient of v^-1, as a machine integer
inline long long mu_coefficient(const LaurentPoly& p) { return static_cast<long long>(p.coeff(-1)); }

/// Sort keys by length then ShortLex.
inline std::vector<Element> sorted_support(const CoxeterGroup& g, const Combination& x) {
  std::vector<Element> keys;
  for (const auto& [k, a] : x.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [&](Element a, Element b) { return g.shortlex_less(a, b); });
  return keys;
}

inline std::string render(const CoxeterGroup& g, const TLElement& x) {
  const char* tag = x.basis == TLBasis::t_tilde ? "t" : "c";
  std::string s;
  for (Element k : sorted_support(g, x.coords))
    s += to_string(x.coords.coeff(k)) + " * " + tag + "[" + g.format(k) + "]\n";
  return s;
}

/// Inverse of render(); an empty text is the zero element in the t-basis.
inline TLElement parse_tl_element(const CoxeterGroup& g, std::string_view text) {
  TLElement x;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_basis = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto star = line.rfind(" * ");
    auto open = line.find('[', star == std::string::npos ? 0 : star);
    auto close = line.rfind(']');
    if (star == std::string::npos || open == std::string::npos || close == std::string::npos || close < open)
      throw ParseError("malformed element line: " + line);
    std::string tag = line.substr(star + 3, open - star - 3);
    TLBasis b;
    if (tag == "t") b = TLBasis::t_tilde;
    else if (tag == "c") b = TLBasis::c;
    else throw ParseError("unknown basis tag '" + tag + "'");
    if (have_basis && b != x.basis) throw ParseError("mixed bases in one element");
    x.basis = b;
    have_basis = true;
    Element w = g.normal_form(parse_word(line.substr(open + 1, close - open - 1), g.rank()));
    if (!g.is_fully_commutative(w)) throw ParseError("key is not fully commutative: " + g.format(w));
    x.coords.add(w, parse_laurent(line.substr(0, star)));
  }
  return x;
}

/**
 * TL(X) in the t-tilde basis indexed by fully commutative elements.
 *
 * Products are built from left multiplication by generators; a product that
 * lands on a weakly complex element is rewritten through the longest element
 * of a rank two parabolic. Right multiplication goes through the star
 * anti-involution. All tables are memoized under a lock.
 */
class TemperleyLiebAlgebra {
 public:
  explicit TemperleyLiebAlgebra(const CoxeterGroup& g) : g_(g) {}
  TemperleyLiebAlgebra(const TemperleyLiebAlgebra&) = delete;
  TemperleyLiebAlgebra& operator=(const TemperleyLiebAlgebra&) = delete;

  const CoxeterGroup& group() const { return g_; }

  Combination t(Element w) const {
    require_fc(w);
    return Combination(w);
  }
  Combination one() const { return Combination(g_.identity()); }
  // c_s = t_s + v^-1 t_1
  Combination c_gen(Gen s) const {
    Combination c(g_.generator(s));
    c.add(g_.identity(), LaurentPoly::v(-1));
    return c;
  }

  /// t_s * x or x * t_s
  Combination mul_gen(Gen s, const Combination& x, Side side = Side::left) const {
    std::lock_guard lk(mu_);
    if (side == Side::right) return star(left_gen(s, star(x)));
    return left_gen(s, x);
  }

  Combination mul(const Combination& x, const Combination& y) const {
    std::lock_guard lk(mu_);
    Combination out;
    for (const auto& [w, a] : x.terms()) out.add_scaled(left_word(g_.word(w), y), a);
    return out;
  }

  /// t_{w^-1} for each key
  Combination star(const Combination& x) const {
    return x.map_keys([&](Element w) { return g_.inverse(w); });
  }

  Combination bar(const Combination& x) const {
    std::lock_guard lk(mu_);
    Combination out;
    for (const auto& [w, a] : x.terms()) out.add_scaled(bar_t(w), gtl::bar(a));
    return out;
  }

  /// Image of the Hecke basis element T_x for arbitrary x (zero allowed).
  const Combination& expand(Element x) const {
    std::lock_guard lk(mu_);
    if (auto it = expand_.find(x.id); it != expand_.end()) return it->second;
    Combination r;
    if (g_.is_fully_commutative(x)) {
      r = Combination(x);
    } else {
      Gen s = g_.word(x).front();
      r = left_gen(s, expand(g_.mul_left(s, x)));
    }
    return expand_.emplace(x.id, std::move(r)).first->second;
  }

  /// bar(t_w)
  const Combination& bar_t(Element w) const {
    std::lock_guard lk(mu_);
    if (auto it = bar_.find(w.id); it != bar_.end()) return it->second;
    require_fc(w);
    Combination r;
    if (w == g_.identity()) {
      r = one();
    } else {
      Gen s = g_.word(w).front();
      Combination b = bar_t(g_.mul_left(s, w));
      r = left_gen(s, b);
      r.add_scaled(b, -v_minus_vinv());
    }
    return bar_.emplace(w.id, std::move(r)).first->second;
  }

  /// c_w in t-tilde coordinates.
  const Combination& canonical(Element w, CanonicalAlgorithm alg = CanonicalAlgorithm::triangular) const {
    std::lock_guard lk(mu_);
    auto& cache = alg == CanonicalAlgorithm::triangular ? c_tri_ : c_rec_;
    if (auto it = cache.find(w.id); it != cache.end()) return it->second;
    require_fc(w);
    Combination r = alg == CanonicalAlgorithm::triangular ? solve_triangular(w, false) : solve_recursive(w);
    return cache.emplace(w.id, std::move(r)).first->second;
  }

  /// Triangular solve with the opposite tie-break inside each length; for uniqueness checks.
  Combination canonical_reordered(Element w) const {
    std::lock_guard lk(mu_);
    require_fc(w);
    return solve_triangular(w, true);
  }

  LaurentPoly p_star(Element y, Element w) const { return canonical(w).coeff(y); }
  long long M(Element y, Element w) const { return mu_coefficient(p_star(y, w)); }
  long long M_tilde(Element x, Element y) const {
    if (g_.length(x) <= g_.length(y)) return M(x, y);
    return M(y, x);
  }

  /// column w of q* by inverting the p* matrix
  const Combination& q_star_column(Element w) const {
    std::lock_guard lk(mu_);
    if (auto it = qinv_.find(w.id); it != qinv_.end()) return it->second;
    require_fc(w);
    // Q(x) = eps_x eps_w q*(x, w) is the c-coordinate of t_w at c_x
    auto later_first = [&](Element a, Element b) { return before(b, a, false); };
    std::set<Element, decltype(later_first)> queue(later_first);
    Combination Q(w);
    for (const auto& [x, p] : canonical(w).terms())
      if (x != w) queue.insert(x);
    while (!queue.empty()) {
      Element x = *queue.begin();
      queue.erase(queue.begin());
      LaurentPoly val;
      for (const auto& [z, qz] : Q.terms())
        if (z != x) {
          LaurentPoly p = canonical(z).coeff(x);
          if (!p.is_zero()) val -= p * qz;
        }
      if (val.is_zero()) continue;
      Q.add(x, val);
      for (const auto& [y, p] : canonical(x).terms())
        if (y != x) queue.insert(y);
    }
    Combination q;
    for (const auto& [x, a] : Q.terms()) q.add(x, epsilon(g_, x) * epsilon(g_, w) == 1 ? a : -a);
    return qinv_.emplace(w.id, std::move(q)).first->second;
  }

  LaurentPoly q_star(Element x, Element w) const { return q_star_column(w).coeff(x); }

  /// column w of q(x, w) = v^{l(w)-l(x)} q*(x, w) by the descent recurrence
  const Combination& q_column_recurrence(Element w) const {
    std::lock_guard lk(mu_);
    if (auto it = qrec_.find(w.id); it != qrec_.end()) return it->second;
    require_fc(w);
    Combination out;
    if (w == g_.identity()) {
      out = one();
    } else {
      Gen s = std::countr_zero(g_.descent_mask(w, Side::left));
      Element w0 = g_.mul_left(s, w);
      Combination Q = q_column_recurrence(w0);
      std::set<Element> cand;
      for (const auto& [z, a] : Q.terms()) {
        cand.insert(z);
        if (!g_.has_descent(z, s, Side::left)) {
          Element sz = g_.mul_left(s, z);
          if (g_.is_fully_commutative(sz)) cand.insert(sz);
          for (const auto& [x, p] : canonical(z).terms())
            if (x != z && mu_coefficient(p) != 0) cand.insert(x);
        }
      }
      for (Element x : cand) {
        LaurentPoly val;
        if (!g_.has_descent(x, s, Side::left)) {
          val = Q.coeff(x);
        } else {
          val = -Q.coeff(x).shifted(2) + Q.coeff(g_.mul_left(s, x));
          for (const auto& [y, qy] : Q.terms()) {
            if (y == x || g_.has_descent(y, s, Side::left)) continue;
            long long m = M(x, y);
            if (m == 0) continue;
            val += (qy * Integer(m)).shifted(g_.length(y) + 1 - g_.length(x));
          }
        }
        out.add(x, val);
      }
    }
    return qrec_.emplace(w.id, std::move(out)).first->second;
  }

  /// q* column from the recurrence, converted from q
  Combination q_star_column_recurrence(Element w) const {
    Combination q = q_column_recurrence(w);
    Combination out;
    for (const auto& [x, a] : q.terms()) out.add(x, a.shifted(g_.length(x) - g_.length(w)));
    return out;
  }

  /// t-tilde coordinates of an element given in c coordinates, and back.
  Combination from_c(const Combination& x) const {
    Combination out;
    for (const auto& [w, a] : x.terms()) out.add_scaled(canonical(w), a);
    return out;
  }
  Combination to_c(const Combination& x) const {
    Combination out;
    for (const auto& [w, a] : x.terms())
      for (const auto& [y, q] : q_star_column(w).terms())
        out.add(y, epsilon(g_, y) * epsilon(g_, w) == 1 ? q * a : -(q * a));
    return out;
  }

  TLElement convert(const TLElement& x, TLBasis to) const {
    if (x.basis == to) return x;
    return TLElement{to, to == TLBasis::c ? to_c(x.coords) : from_c(x.coords)};
  }

  /// t_a * c_y, memoized per pair
  const Combination& t_times_c(Element a, Element y) const {
    std::lock_guard lk(mu_);
    std::uint64_t key = (static_cast<std::uint64_t>(a.id) << 32) | y.id;
    if (auto it = tc_.find(key); it != tc_.end()) return it->second;
    Combination r;
    if (a == g_.identity()) {
      r = canonical(y);
    } else {
      Gen s = g_.word(a).front();
      r = left_gen(s, t_times_c(g_.mul_left(s, a), y));
    }
    return tc_.emplace(key, std::move(r)).first->second;
  }

  /// c_x c_y expanded in the c-basis
  Combination c_mul(Element x, Element y) const {
    require_fc(x);
    require_fc(y);
    Combination prod;
    for (const auto& [a, p] : canonical(x).terms()) prod.add_scaled(t_times_c(a, y), p);
    return to_c(prod);
  }

  void require_fc(Element w) const {
    if (!g_.is_fully_commutative(w)) throw PreconditionError("not fully commutative: " + g_.format(w));
  }

  // strict order used by the solvers: shorter first, ties by ShortLex (or reversed)
  bool before(Element a, Element b, bool reversed_ties) const {
    int la = g_.length(a), lb = g_.length(b);
    if (la != lb) return la < lb;
    if (a == b) return false;
    const Word& wa = g_.word(a);
    const Word& wb = g_.word(b);
    return reversed_ties ? wa < wb : wb < wa;
  }

 private:
  // t_s * t_w
  const Combination& gen_table(Gen s, Element w) const {
    std::uint64_t key = (static_cast<std::uint64_t>(w.id) << 6) | static_cast<std::uint64_t>(s);
    if (auto it = gen_.find(key); it != gen_.end()) return it->second;
    Combination r;
    Element sw = g_.mul_left(s, w);
    if (g_.has_descent(w, s, Side::left)) {
      r.add(sw, LaurentPoly(1));
      r.add(w, v_minus_vinv());
    } else if (g_.is_fully_commutative(sw)) {
      r.add(sw, LaurentPoly(1));
    } else {
      r = rewrite(w, s);
    }
    return gen_.emplace(key, std::move(r)).first->second;
  }

  // t_{sw} for FC w with sw weakly complex
  Combination rewrite(Element w, Gen s) const {
    FcPrefix d = g_.decompose_fc_prefix(w, s);
    int m = g_.graph().bond(s, d.t);
    if (m == kInf) throw ConsistencyError("rewrite requested a longest element for an infinite bond");
    Word prefix = g_.word(d.w1);
    Combination base(d.w3);
    Combination out;
    // every u < w_st in the parabolic: identity and two alternating words per length
    for (int len = 0; len < m; ++len) {
      for (int start = 0; start < (len == 0 ? 1 : 2); ++start) {
        Word u = prefix;
        for (int k = 0; k < len; ++k) u.push_back((k % 2 == 0) == (start == 0) ? s : d.t);
        out.add_scaled(left_word(u, base), -LaurentPoly::v(len - m));
      }
    }
    return out;
  }

  Combination left_gen(Gen s, const Combination& x) const {
    Combination out;
    for (const auto& [w, a] : x.terms()) out.add_scaled(gen_table(s, w), a);
    return out;
  }

  // t_{u_1} ... t_{u_k} * x
  Combination left_word(const Word& u, const Combination& x) const {
    Combination r = x;
    for (auto it = u.rbegin(); it != u.rend(); ++it) r = left_gen(*it, r);
    return r;
  }

  Combination solve_triangular(Element w, bool reversed) const {
    return bar_solve(
        w, [&](Element y) -> const Combination& { return bar_t(y); },
        [&](Element a, Element b) { return before(a, b, reversed); });
  }

  Combination solve_recursive(Element w) const {
    if (w == g_.identity()) return one();
    Gen s = std::countr_zero(g_.descent_mask(w, Side::left));
    Element x = g_.mul_left(s, w);
    const Combination& cx = canonical(x, CanonicalAlgorithm::recursion);
    Combination r = left_gen(s, cx);
    r.add_scaled(cx, LaurentPoly::v(-1));
    for (const auto& [y, p] : cx.terms()) {
      if (y == x || !g_.has_descent(y, s, Side::left)) continue;
      long long m = mu_coefficient(p);
      if (m != 0) r.add_scaled(canonical(y, CanonicalAlgorithm::recursion), LaurentPoly(Integer(-m)));
    }
    for (const auto& [y, p] : r.terms()) {
      bool ok = y == w ? p == LaurentPoly(1) : (p.max_exponent() <= -1);
      if (!ok)
        throw ConsistencyError("recursive canonical basis left the lattice at " + g_.format(w) +
                               "; Property W fails here");
    }
    return r;
  }

  const CoxeterGroup& g_;
  mutable std::recursive_mutex mu_;
  mutable std::unordered_map<std::uint64_t, Combination> gen_, tc_;
  mutable std::unordered_map<std::uint32_t, Combination> expand_, bar_, c_tri_, c_rec_, qinv_, qrec_;
};

/// Lattices spanned over Z[v^-1].
enum class Lattice { L, left_s, left_st };

inline bool lattice_membership(const CoxeterGroup& g, const Combination& x, Lattice which, Gen s = 0, Gen t = 0) {
  for (const auto& [w, a] : x.terms()) {
    if (a.max_exponent() > 0) return false;
    if (a.max_exponent() < 0) continue;
    // the coefficient has a constant term
    if (which == Lattice::left_s && !g.has_descent(w, s, Side::left)) return false;
    if (which == Lattice::left_st) {
      if (!g.has_descent(w, s, Side::left) || !g.has_descent(g.mul_left(s, w), t, Side::left)) return false;
    }
  }
  return true;
}

/// Weakly complex elements of length <= bound, length-ShortLex sorted.
inline std::vector<Element> weakly_complex_elements(const CoxeterGroup& g, int bound) {
  std::vector<Element> out;
  std::set<std::uint32_t> seen;
  for (Element w : g.enumerate(bound - 1, EnumFilter::fully_commutative))
    for (Gen s = 0; s < g.rank(); ++s) {
      if (g.has_descent(w, s, Side::left)) continue;
      Element x = g.mul_left(s, w);
      if (!g.is_fully_commutative(x) && seen.insert(x.id).second) out.push_back(x);
    }
  std::sort(out.begin(), out.end(), [&](Element a, Element b) { return g.shortlex_less(a, b); });
  return out;
}

/// t_x lies in v^-1 L for every weakly complex x of length <= bound.
inline Report check_property_W(const TemperleyLiebAlgebra& tl, int bound) {
  const CoxeterGroup& g = tl.group();
  Report r{"W", g.graph().name(), bound, {}};
  Check& main = r.add("W");
  Check& side = r.add("left-lattice", false);
  if (bound < 1) return r;
  for (Element x : weakly_complex_elements(g, bound)) {
    const Combination& e = tl.expand(x);
    bool ok = std::all_of(e.terms().begin(), e.terms().end(),
                          [](const auto& kv) { return kv.second.max_exponent() <= -1; });
    if (!ok) main.failures.push_back(g.format(x));
    for (Gen s : g.descents(x, Side::left))
      if (g.is_fully_commutative(g.mul_left(s, x)) && !lattice_membership(g, e, Lattice::left_s, s))
        side.failures.push_back(g.format(x) + " s=" + std::to_string(s + 1));
  }
  return r;
}

/// Chebyshev polynomials P_0 = 1, P_1 = x, P_n = x P_{n-1} - P_{n-2}; coefficient vectors.
inline std::vector<std::vector<long long>> chebyshev(int upto) {
  std::vector<std::vector<long long>> P{{1}, {0, 1}};
  for (int n = 2; n <= upto; ++n) {
    std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
    for (std::size_t i = 0; i < P[n - 1].size(); ++i) p[i + 1] += P[n - 1][i];
    for (std::size_t i = 0; i < P[n - 2].size(); ++i) p[i] -= P[n - 2][i];
    P.push_back(std::move(p));
  }
  P.resize(static_cast<std::size_t>(std::max(upto + 1, 1)));
  return P;
}

/// (x P_i)^{s,t}: x^k becomes the alternating product c_s c_t c_s ... with k factors.
inline Combination dihedral_cbasis(const TemperleyLiebAlgebra& tl, Gen s, Gen t, int i) {
  int m = tl.group().graph().bond(s, t);
  if (m < 3) throw PreconditionError("dihedral basis needs a noncommuting pair");
  if (i < 0 || (m != kInf && i > m - 2)) throw PreconditionError("Chebyshev index out of range");
  auto P = chebyshev(i);
  const auto& pi = P[i];
  Combination out;
  // alternating products ending ... c_s; build from the right so the word starts with s
  for (std::size_t k = 0; k < pi.size(); ++k) {
    if (pi[k] == 0) continue;
    int factors = static_cast<int>(k) + 1;
    Combination prod = tl.one();
    for (int j = factors - 1; j >= 0; --j) prod = tl.mul(tl.c_gen(j % 2 == 0 ? s : t), prod);
    out.add_scaled(prod, LaurentPoly(Integer(pi[k])));
  }
  return out;
}

}  // namespace gtl
