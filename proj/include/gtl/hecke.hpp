#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtl/bar_solve.hpp"
#include "gtl/temperley_lieb.hpp"

namespace gtl {

/// Element of the Hecke algebra in the T-tilde basis; keys range over all of W.
using HeckeElement = SparseCombination<Element>;

/// Polynomial in q = v^2, ascending coefficients.
using QPoly = std::vector<Integer>;

inline QPoly to_q_poly(const LaurentPoly& p) {
  QPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0 || e % 2 != 0) throw ConsistencyError("not a polynomial in q: " + to_string(p));
    if (out.size() <= static_cast<std::size_t>(e / 2)) out.resize(static_cast<std::size_t>(e / 2) + 1);
    out[static_cast<std::size_t>(e / 2)] = c;
  }
  return out;
}

/// "1 + q", "1 - 2q + q^3"; ascending powers.
inline std::string q_poly_string(const QPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Integer a = p[i] < 0 ? Integer(-p[i]) : p[i];
    if (s.empty()) s += p[i] < 0 ? "-" : "";
    else s += p[i] < 0 ? " - " : " + ";
    std::string mono = i == 0 ? "" : i == 1 ? "q" : "q^" + std::to_string(i);
    if (mono.empty()) s += a.str();
    else s += (a == 1 ? "" : a.str()) + mono;
  }
  return s.empty() ? "0" : s;
}

/**
 * Full Hecke algebra of a Coxeter group, computed by brute force.
 *
 * Intended as an independent check on the quotient computations, so nothing
 * here uses the Temperley-Lieb tables except theta(). Intervals larger than
 * the element cap are refused.
 */
class HeckeAlgebra {
 public:
  static constexpr std::size_t kDefaultCap = 50000;

  explicit HeckeAlgebra(const CoxeterGroup& g, std::size_t cap = kDefaultCap) : g_(g), cap_(cap) {}
  HeckeAlgebra(const HeckeAlgebra&) = delete;
  HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

  const CoxeterGroup& group() const { return g_; }
  std::size_t cap() const { return cap_; }

  HeckeElement T(Element w) const { return HeckeElement(w); }
  HeckeElement one() const { return HeckeElement(g_.identity()); }

  HeckeElement mul_gen(Gen s, const HeckeElement& x, Side side = Side::left) const {
    HeckeElement out;
    for (const auto& [w, a] : x.terms()) {
      Element sw = g_.mul(w, s, side);
      out.add(sw, a);
      if (g_.has_descent(w, s, side)) out.add(w, a * v_minus_vinv());
    }
    return out;
  }

  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const {
    HeckeElement out;
    for (const auto& [w, a] : x.terms()) out.add_scaled(left_word(g_.word(w), y), a);
    return out;
  }

  /// bar(T_w) = T_{w^-1}^{-1}
  const HeckeElement& bar_T(Element w) const {
    std::lock_guard lk(mu_);
    if (auto it = bar_.find(w.id); it != bar_.end()) return it->second;
    HeckeElement r;
    if (w == g_.identity()) {
      r = one();
    } else {
      Gen s = g_.word(w).front();
      HeckeElement b = bar_T(g_.mul_left(s, w));
      r = mul_gen(s, b);
      r.add_scaled(b, -v_minus_vinv());
    }
    if (r.size() > cap_)
      throw CapExceeded("Bruhat interval below " + g_.format(w) + " exceeds the oracle cap of " +
                        std::to_string(cap_) + " elements");
    return bar_.emplace(w.id, std::move(r)).first->second;
  }

  HeckeElement bar(const HeckeElement& x) const {
    HeckeElement out;
    for (const auto& [w, a] : x.terms()) out.add_scaled(bar_T(w), gtl::bar(a));
    return out;
  }

  /// C'_w in T-tilde coordinates.
  const HeckeElement& kl_basis(Element w) const {
    std::lock_guard lk(mu_);
    if (auto it = kl_.find(w.id); it != kl_.end()) return it->second;
    return kl_.emplace(w.id, solve(w, false)).first->second;
  }

  HeckeElement kl_basis_reordered(Element w) const {
    std::lock_guard lk(mu_);
    return solve(w, true);
  }

  LaurentPoly p_star(Element y, Element w) const { return kl_basis(w).coeff(y); }
  QPoly P(Element y, Element w) const { return to_q_poly(p_star(y, w).shifted(g_.length(w) - g_.length(y))); }

  long long mu(Element y, Element w) const {
    if (y == w) return 0;
    return mu_coefficient(p_star(y, w));
  }

  long long mu_tilde(Element x, Element y) const {
    if (x == y) return 0;
    return g_.bruhat_leq(x, y) ? mu(x, y) : mu(y, x);
  }

  /// the T-tilde basis is orthonormal
  LaurentPoly form(const HeckeElement& x, const HeckeElement& y) const {
    LaurentPoly s;
    for (const auto& [w, a] : x.terms()) {
      LaurentPoly b = y.coeff(w);
      if (!b.is_zero()) s += a * b;
    }
    return s;
  }

  /// T_a C'_y, memoized per pair
  const HeckeElement& T_times_C(Element a, Element y) const {
    std::lock_guard lk(mu_);
    std::uint64_t key = (static_cast<std::uint64_t>(a.id) << 32) | y.id;
    if (auto it = tc_.find(key); it != tc_.end()) return it->second;
    HeckeElement r;
    if (a == g_.identity()) {
      r = kl_basis(y);
    } else {
      Gen s = g_.word(a).front();
      r = mul_gen(s, T_times_C(g_.mul_left(s, a), y));
    }
    return tc_.emplace(key, std::move(r)).first->second;
  }

  /// C'_x C'_y in T-tilde coordinates
  HeckeElement kl_mul(Element x, Element y) const {
    HeckeElement out;
    for (const auto& [a, p] : kl_basis(x).terms()) out.add_scaled(T_times_C(a, y), p);
    return out;
  }

  /// C' coordinates of x, by peeling off the top term.
  HeckeElement to_kl(HeckeElement x) const {
    HeckeElement out;
    while (!x.is_zero()) {
      Element top = x.terms().begin()->first;
      for (const auto& [w, a] : x.terms())
        if (g_.shortlex_less(top, w)) top = w;
      LaurentPoly a = x.coeff(top);
      out.add(top, a);
      x.add_scaled(kl_basis(top), -a);
    }
    return out;
  }

 private:
  HeckeElement left_word(const Word& u, const HeckeElement& x) const {
    HeckeElement r = x;
    for (auto it = u.rbegin(); it != u.rend(); ++it) r = mul_gen(*it, r);
    return r;
  }

  HeckeElement solve(Element w, bool reversed) const {
    return bar_solve(
        w, [&](Element y) -> const HeckeElement& { return bar_T(y); },
        [&](Element a, Element b) {
          int la = g_.length(a), lb = g_.length(b);
          if (la != lb) return la < lb;
          if (a == b) return false;
          return reversed ? g_.word(a) < g_.word(b) : g_.word(b) < g_.word(a);
        });
  }

  const CoxeterGroup& g_;
  std::size_t cap_;
  mutable std::recursive_mutex mu_;
  mutable std::unordered_map<std::uint32_t, HeckeElement> bar_, kl_;
  mutable std::unordered_map<std::uint64_t, HeckeElement> tc_;
};

/// Projection onto TL(X): every T_w is rewritten into the fully commutative basis.
inline Combination theta(const TemperleyLiebAlgebra& tl, const HeckeElement& x) {
  Combination out;
  for (const auto& [w, a] : x.terms()) out.add_scaled(tl.expand(w), a);
  return out;
}

/// Membership in the kernel of theta.
inline bool in_J(const TemperleyLiebAlgebra& tl, const HeckeElement& x) { return theta(tl, x).is_zero(); }

}  // namespace gtl
