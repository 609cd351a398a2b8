#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "gtl/diagram.hpp"
#include "gtl/star.hpp"
#include "gtl/temperley_lieb.hpp"

namespace gtl {

/// Values tau(c_w) on fully commutative w.
struct TraceTable {
  std::map<Element, LaurentPoly> values;
};

/// Lines "<word or e> : <Laurent polynomial>", '#' starts a comment.
inline TraceTable load_trace_table(const CoxeterGroup& g, std::string_view text) {
  TraceTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& msg) { return ParseError("trace table line " + std::to_string(lineno) + ": " + msg); };
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw fail("expected '<word> : <polynomial>'");
    Element w;
    LaurentPoly p;
    try {
      w = g.normal_form(parse_word(line.substr(0, colon), g.rank()));
      p = parse_laurent(line.substr(colon + 1));
    } catch (const ParseError& e) {
      throw fail(e.what());
    }
    if (!g.is_fully_commutative(w)) throw fail("key is not fully commutative: " + g.format(w));
    if (!t.values.emplace(w, p).second) throw fail("duplicate key " + g.format(w));
  }
  return t;
}

inline std::string render_trace_table(const CoxeterGroup& g, const TraceTable& t) {
  std::vector<Element> keys;
  for (const auto& [w, p] : t.values) keys.push_back(w);
  std::sort(keys.begin(), keys.end(), [&](Element a, Element b) { return g.shortlex_less(a, b); });
  std::string s;
  for (Element w : keys) s += g.format(w) + " : " + to_string(t.values.at(w)) + "\n";
  return s;
}

/// Drop every term of tau(c_w) whose exponent has the wrong parity for l(w).
/// Returns true when something was removed.
inline bool homogenize_table(const CoxeterGroup& g, TraceTable& t) {
  bool changed = false;
  for (auto& [w, p] : t.values) {
    LaurentPoly h = homogenize(p, g.length(w) % 2);
    if (!(h == p)) {
      changed = true;
      p = std::move(h);
    }
  }
  return changed;
}

/// tau(c_w) for type A_n from the diagram closure.
inline LaurentPoly diagram_trace(const CoxeterGroup& g, Element w) {
  if (!g.graph().is_type_a()) throw PreconditionError("the built-in diagram trace needs a type A graph");
  if (!g.is_fully_commutative(w)) throw PreconditionError("not fully commutative: " + g.format(w));
  PlanarDiagram d = diagram_of(g, w);
  int n1 = g.rank() + 1;
  return LaurentPoly::v(-n1) * power(delta_poly(), closure_loops(d) + d.loops);
}

inline TraceTable diagram_trace_table(const CoxeterGroup& g, int bound) {
  TraceTable t;
  for (Element w : g.enumerate(bound, EnumFilter::fully_commutative)) t.values.emplace(w, diagram_trace(g, w));
  return t;
}

/**
 * The bilinear form <x, y> = tau(x y*) on TL(X) for a trace given on the
 * canonical basis, either by the type A diagram calculus or by a table.
 */
class TraceForm {
 public:
  /// built-in diagram trace
  explicit TraceForm(const TemperleyLiebAlgebra& tl) : tl_(tl) {
    if (!tl.group().graph().is_type_a()) throw PreconditionError("the built-in diagram trace needs a type A graph");
  }
  TraceForm(const TemperleyLiebAlgebra& tl, TraceTable table) : tl_(tl), table_(std::move(table)) {}
  TraceForm(const TraceForm&) = delete;
  TraceForm& operator=(const TraceForm&) = delete;

  const TemperleyLiebAlgebra& algebra() const { return tl_; }
  bool builtin() const { return !table_; }

  LaurentPoly tau_c(Element w) const {
    const CoxeterGroup& g = tl_.group();
    if (!table_) return diagram_trace(g, w);
    auto it = table_->values.find(w);
    if (it == table_->values.end()) throw TableGap("trace table has no value for " + g.format(w));
    return it->second;
  }

  /// tau(t_w)
  LaurentPoly tau_t(Element w) const {
    std::lock_guard lk(mu_);
    if (auto it = tau_t_.find(w.id); it != tau_t_.end()) return it->second;
    LaurentPoly s;
    Combination c = tl_.to_c(tl_.t(w));
    for (const auto& [y, a] : c.terms()) s += a * tau_c(y);
    return tau_t_.emplace(w.id, s).first->second;
  }

  LaurentPoly tau(const TLElement& x) const {
    LaurentPoly s;
    if (x.basis == TLBasis::c) {
      for (const auto& [w, a] : x.coords.terms()) s += a * tau_c(w);
    } else {
      for (const auto& [w, a] : x.coords.terms()) s += a * tau_t(w);
    }
    return s;
  }

  /// tau(x y*), both given in t-tilde coordinates
  LaurentPoly form(const Combination& x, const Combination& y) const {
    return tau(TLElement{TLBasis::t_tilde, tl_.mul(x, tl_.star(y))});
  }

  LaurentPoly form(const TLElement& x, const TLElement& y) const {
    return form(tl_.convert(x, TLBasis::t_tilde).coords, tl_.convert(y, TLBasis::t_tilde).coords);
  }

  /// <t_x, t_y>, memoized
  LaurentPoly form_t(Element x, Element y) const {
    std::lock_guard lk(mu_);
    std::uint64_t key = (static_cast<std::uint64_t>(x.id) << 32) | y.id;
    if (auto it = gram_t_.find(key); it != gram_t_.end()) return it->second;
    return gram_t_.emplace(key, form(tl_.t(x), tl_.t(y))).first->second;
  }

  /// <c_x, c_y> = tau(c_x c_{y^-1})
  LaurentPoly form_c(Element x, Element y) const {
    LaurentPoly s;
    Combination prod = tl_.c_mul(x, tl_.group().inverse(y));
    for (const auto& [z, a] : prod.terms()) s += a * tau_c(z);
    return s;
  }

  /// coefficient of v^-1 in <c_x, c_y>; needs a bipartite graph and a homogeneous trace
  long long mu(Element x, Element y) const {
    const CoxeterGroup& g = tl_.group();
    if (!bipartite_coloring(g.graph()))
      throw PreconditionError("mu from a trace needs a bipartite Coxeter graph; " + g.graph().name() + " is not");
    tl_.require_fc(x);
    tl_.require_fc(y);
    Combination prod = tl_.c_mul(x, g.inverse(y));
    for (const auto& [z, a] : prod.terms()) {
      LaurentPoly t = tau_c(z);
      if (!(homogenize(t, g.length(z) % 2) == t))
        throw PreconditionError("trace is not homogeneous at " + g.format(z));
    }
    LaurentPoly s;
    for (const auto& [z, a] : prod.terms()) s += a * tau_c(z);
    return mu_coefficient(s);
  }

 private:
  const TemperleyLiebAlgebra& tl_;
  std::optional<TraceTable> table_;
  mutable std::recursive_mutex mu_;
  mutable std::unordered_map<std::uint32_t, LaurentPoly> tau_t_;
  mutable std::unordered_map<std::uint64_t, LaurentPoly> gram_t_;
};

/**
 * Checks the trace form on all FC elements of length <= bound.
 *
 * Adjointness, almost orthonormality of the t-tilde basis and symmetry decide
 * the verdict; homogeneity, positivity and the sharpened off-diagonal bound
 * are reported alongside.
 */
inline Report verify_property_B(const TraceForm& form, int bound) {
  const TemperleyLiebAlgebra& tl = form.algebra();
  const CoxeterGroup& g = tl.group();
  Report r{"B", g.graph().name(), bound, {}};
  Check& adj = r.add("adjointness");
  Check& orth = r.add("orthonormality");
  Check& sym = r.add("symmetry");
  Check& hom = r.add("homogeneity", false);
  Check& pos = r.add("positivity", false);
  Check& sharp = r.add("sharpened-bound", false);

  auto fc = g.enumerate(bound, EnumFilter::fully_commutative);
  std::set<Element> in_range(fc.begin(), fc.end());
  auto pair = [&](Element x, Element y) { return g.format(x) + " | " + g.format(y); };

  for (Element w : fc) {
    LaurentPoly t = form.tau_c(w);
    if (!(homogenize(t, g.length(w) % 2) == t)) hom.failures.push_back(g.format(w));
    for (const auto& [e, a] : t.terms())
      if (a < 0) {
        pos.failures.push_back(g.format(w));
        break;
      }
  }
  for (Element x : fc)
    for (Element y : fc) {
      LaurentPoly p = form.form_t(x, y);
      LaurentPoly rest = x == y ? p - LaurentPoly(1) : p;
      if (!rest.is_zero() && rest.max_exponent() > -1) orth.failures.push_back(pair(x, y));
      if (x != y && !p.is_zero() && p.max_exponent() > -2) sharp.failures.push_back(pair(x, y));
      if (!(p == form.form_t(y, x))) sym.failures.push_back(pair(x, y));
    }
  // <t_s t_x, t_y> = <t_x, t_s t_y>, expanded through the Gram values where possible
  auto paired = [&](const Combination& a, Element y, bool a_left) {
    LaurentPoly s;
    for (const auto& [z, c] : a.terms())
      s += c * (in_range.count(z) ? (a_left ? form.form_t(z, y) : form.form_t(y, z))
                                  : (a_left ? form.form(tl.t(z), tl.t(y)) : form.form(tl.t(y), tl.t(z))));
    return s;
  };
  for (Gen s = 0; s < g.rank(); ++s)
    for (Element x : fc)
      for (Element y : fc) {
        LaurentPoly lhs = paired(tl.mul_gen(s, tl.t(x)), y, true);
        LaurentPoly rhs = paired(tl.mul_gen(s, tl.t(y)), x, false);
        if (!(lhs == rhs)) adj.failures.push_back("s=" + std::to_string(s + 1) + " | " + pair(x, y));
      }
  return r;
}

}  // namespace gtl
