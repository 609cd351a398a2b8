#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "gtl/hecke.hpp"
#include "gtl/jones_trace.hpp"
#include "gtl/star.hpp"

namespace gtl {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { text, tsv };

struct RunConfig {
  CoxeterGraph graph{1};
  bool from_preset = false;
  std::optional<int> bound;
  std::set<std::string> methods;  // empty means the command default
  std::optional<std::string> trace_path;
  std::size_t closure_cap = CoxeterGroup::kDefaultClosureCap;
  std::size_t oracle_cap = HeckeAlgebra::kDefaultCap;
  OutputFormat format = OutputFormat::text;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int fails = 1;
inline constexpr int usage = 2;
inline constexpr int consistency = 3;
}  // namespace exit_code

/// Order and longest-element length of a finite preset, if known.
inline std::optional<std::pair<unsigned long long, int>> preset_size(const std::string& name) {
  auto fact = [](int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  if (name.size() < 2 || name[0] == '~') return std::nullopt;
  if (name.rfind("I2(", 0) == 0) {
    std::string m = name.substr(3, name.size() - 4);
    if (m == "inf") return std::nullopt;
    int k = std::stoi(m);
    return std::pair{2ULL * static_cast<unsigned long long>(k), k};
  }
  int n = std::stoi(name.substr(1));
  switch (name[0]) {
    case 'A': return std::pair{fact(n + 1), n * (n + 1) / 2};
    case 'B': return std::pair{(1ULL << n) * fact(n), n * n};
    case 'D': return std::pair{(1ULL << (n - 1)) * fact(n), n * (n - 1)};
    case 'E':
      if (n == 6) return std::pair{51840ULL, 36};
      if (n == 7) return std::pair{2903040ULL, 63};
      return std::pair{696729600ULL, 120};
    case 'F': return std::pair{1152ULL, 24};
    case 'H': return n == 3 ? std::pair{120ULL, 15} : std::pair{14400ULL, 60};
  }
  return std::nullopt;
}

inline int resolve_bound(const RunConfig& cfg) {
  if (cfg.bound) {
    if (*cfg.bound < 0) throw PreconditionError("--bound must be nonnegative");
    return *cfg.bound;
  }
  if (cfg.from_preset)
    if (auto sz = preset_size(cfg.graph.name()); sz && sz->first <= 50000) return sz->second;
  throw PreconditionError("--bound is required for " + cfg.graph.name() +
                          " (only finite presets with at most 50000 elements default to the full group)");
}

/// Parse "m,oracle,trace" or "all".
inline std::set<std::string> parse_methods(const std::string& text) {
  std::set<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "all") out.insert({"m", "oracle", "trace"});
    else if (item == "m" || item == "oracle" || item == "trace") out.insert(item);
    else throw ParseError("unknown method '" + item + "' (expected m, oracle, trace or all)");
  }
  if (out.empty()) throw ParseError("empty method list");
  return out;
}

namespace detail {

inline std::string header(const std::string& what, const RunConfig& cfg, int bound) {
  return "# " + what + "\n# graph " + cfg.graph.name() + "\n# bound " + std::to_string(bound) + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// the trace for a form, with a note on homogenization for tables
inline std::unique_ptr<TraceForm> make_trace(const TemperleyLiebAlgebra& tl, const RunConfig& cfg, std::string* note) {
  if (cfg.trace_path) {
    TraceTable t = load_trace_table(tl.group(), read_file(*cfg.trace_path));
    bool changed = homogenize_table(tl.group(), t);
    if (note) *note = changed ? "table was projected to its homogeneous part" : "table already homogeneous";
    return std::make_unique<TraceForm>(tl, std::move(t));
  }
  if (!tl.group().graph().is_type_a())
    throw PreconditionError("no built-in trace for " + tl.group().graph().name() + "; pass --trace FILE");
  return std::make_unique<TraceForm>(tl);
}

inline std::string delta_text(const LaurentPoly& p) {
  if (auto d = to_delta_basis(p)) return to_string(*d);
  return to_string(p);
}

}  // namespace detail

/// c-basis of every FC element up to the bound, by both algorithms.
inline CommandResult cmd_basis(const RunConfig& cfg) {
  int bound = resolve_bound(cfg);
  CoxeterGroup g(cfg.graph, cfg.closure_cap);
  TemperleyLiebAlgebra tl(g);
  bool tsv = cfg.format == OutputFormat::tsv;
  bool dihedral = g.rank() == 2 && !g.graph().commute(0, 1);
  std::string out = tsv ? "element\tterm\tcoefficient\tagree\n" : detail::header("basis c", cfg, bound);
  bool all_agree = true;
  for (Element w : g.enumerate(bound, EnumFilter::fully_commutative)) {
    const Combination& tri = tl.canonical(w, CanonicalAlgorithm::triangular);
    const Combination& rec = tl.canonical(w, CanonicalAlgorithm::recursion);
    bool agree = tri == rec;
    std::string cheb;
    if (dihedral && w != g.identity()) {
      const Word& u = g.word(w);
      bool ok = dihedral_cbasis(tl, u.front(), u.front() == 0 ? 1 : 0, static_cast<int>(u.size()) - 1) == tri;
      cheb = ok ? " chebyshev=agree" : " chebyshev=DISAGREE";
      agree = agree && ok;
    }
    all_agree = all_agree && agree;
    if (tsv) {
      for (Element y : sorted_support(g, tri))
        out += g.format(w) + "\t" + g.format(y) + "\t" + to_string(tri.coeff(y)) + "\t" + (agree ? "yes" : "no") + "\n";
    } else {
      out += "c[" + g.format(w) + "] algorithms=" + (tri == rec ? "agree" : "DISAGREE") + cheb + "\n";
      out += render(g, TLElement{TLBasis::t_tilde, tri}) + "\n";
    }
  }
  if (cfg.methods.count("oracle")) {
    HeckeAlgebra h(g, cfg.oracle_cap);
    auto elems = g.enumerate(bound, EnumFilter::all, cfg.oracle_cap);
    if (tsv) {
      out += "y\tw\tP\tmu\n";
      for (Element w : elems)
        for (Element y : sorted_support(g, h.kl_basis(w)))
          out += g.format(y) + "\t" + g.format(w) + "\t" + q_poly_string(h.P(y, w)) + "\t" + std::to_string(h.mu(y, w)) + "\n";
    } else {
      out += "# basis C'\n";
      for (Element w : elems) {
        out += "C'[" + g.format(w) + "]\n";
        const HeckeElement& c = h.kl_basis(w);
        for (Element y : sorted_support(g, c)) out += to_string(c.coeff(y)) + " * T[" + g.format(y) + "]\n";
        out += "\n";
      }
    }
  }
  return {all_agree ? exit_code::ok : exit_code::consistency, out};
}

/// M, mu and the trace coefficient on every comparable pair x < y of FC elements.
inline CommandResult cmd_mu(const RunConfig& cfg) {
  int bound = resolve_bound(cfg);
  CoxeterGroup g(cfg.graph, cfg.closure_cap);
  TemperleyLiebAlgebra tl(g);
  std::set<std::string> methods = cfg.methods;
  if (methods.empty()) {
    methods = {"m", "oracle"};
    if (cfg.trace_path || g.graph().is_type_a()) methods.insert("trace");
  }
  std::unique_ptr<HeckeAlgebra> h;
  if (methods.count("oracle")) h = std::make_unique<HeckeAlgebra>(g, cfg.oracle_cap);
  std::unique_ptr<TraceForm> form;
  std::string note;
  if (methods.count("trace")) {
    if (!bipartite_coloring(g.graph()))
      throw PreconditionError("the trace method needs a bipartite Coxeter graph; " + g.graph().name() + " is not");
    form = detail::make_trace(tl, cfg, &note);
  }
  auto fc = g.enumerate(bound, EnumFilter::fully_commutative);
  std::string out = cfg.format == OutputFormat::tsv ? "" : detail::header("mu", cfg, bound) + (note.empty() ? "" : "# " + note + "\n");
  out += "x\ty\tmu_trace\tmu_oracle\tM_tl\tagree\n";
  bool all_agree = true;
  for (Element y : fc)
    for (Element x : fc) {
      if (x == y || !g.bruhat_leq(x, y)) continue;
      std::vector<long long> vals;
      auto cell = [&](bool on, auto f) -> std::string {
        if (!on) return "-";
        long long v = f();
        vals.push_back(v);
        return std::to_string(v);
      };
      std::string t = cell(form != nullptr, [&] { return form->mu(x, y); });
      std::string o = cell(h != nullptr, [&] { return h->mu(x, y); });
      std::string m = cell(methods.count("m") > 0, [&] { return tl.M(x, y); });
      bool agree = std::adjacent_find(vals.begin(), vals.end(), std::not_equal_to<>()) == vals.end();
      all_agree = all_agree && agree;
      out += g.format(x) + "\t" + g.format(y) + "\t" + t + "\t" + o + "\t" + m + "\t" + (agree ? "true" : "false") + "\n";
    }
  return {all_agree ? exit_code::ok : exit_code::consistency, out};
}

/// Property F, S, W or B.
inline CommandResult cmd_verify(const RunConfig& cfg, const std::string& property) {
  int bound = resolve_bound(cfg);
  CoxeterGroup g(cfg.graph, cfg.closure_cap);
  Report r;
  if (property == "F") {
    r = check_property_F(g, bound);
  } else if (property == "S") {
    r = check_property_S(g, bound);
  } else if (property == "W") {
    TemperleyLiebAlgebra tl(g);
    r = check_property_W(tl, bound);
  } else if (property == "B") {
    TemperleyLiebAlgebra tl(g);
    std::string note;
    auto form = detail::make_trace(tl, cfg, &note);
    r = verify_property_B(*form, bound);
    if (!note.empty()) r.checks[3].notes.push_back(note);
  } else {
    throw ParseError("unknown property '" + property + "' (expected F, S, W or B)");
  }
  std::string out = cfg.format == OutputFormat::tsv ? r.render_tsv() : r.render();
  return {r.holds() ? exit_code::ok : exit_code::fails, out};
}

/// All products c_x c_y in the c-basis, each coefficient in the delta basis.
inline CommandResult cmd_structure(const RunConfig& cfg) {
  int bound = resolve_bound(cfg);
  CoxeterGroup g(cfg.graph, cfg.closure_cap);
  TemperleyLiebAlgebra tl(g);
  auto fc = g.enumerate(bound, EnumFilter::fully_commutative);
  std::string out = cfg.format == OutputFormat::tsv ? "" : detail::header("structure", cfg, bound);
  out += "x\ty\tz\tcoefficient\tpositive\n";
  bool all_positive = true;
  for (Element x : fc)
    for (Element y : fc) {
      Combination prod = tl.c_mul(x, y);
      for (Element z : sorted_support(g, prod)) {
        LaurentPoly p = prod.coeff(z);
        bool pos = is_nonneg_delta(p);
        all_positive = all_positive && pos;
        out += g.format(x) + "\t" + g.format(y) + "\t" + g.format(z) + "\t" + detail::delta_text(p) + "\t" +
               (pos ? "yes" : "no") + "\n";
      }
    }
  if (cfg.methods.count("oracle")) {
    // coefficients of C'_z, z fully commutative, in C'_x C'_y
    HeckeAlgebra h(g, cfg.oracle_cap);
    auto elems = g.enumerate(bound, EnumFilter::all, cfg.oracle_cap);
    out += cfg.format == OutputFormat::tsv ? "" : "# oracle C'-products onto fully commutative z\n";
    out += "x\ty\tz\tg\tpositive\n";
    for (Element x : elems)
      for (Element y : elems) {
        HeckeElement k = h.to_kl(h.kl_mul(x, y));
        for (Element z : sorted_support(g, k)) {
          if (!g.is_fully_commutative(z)) continue;
          LaurentPoly p = k.coeff(z);
          bool pos = is_nonneg_delta(p);
          all_positive = all_positive && pos;
          out += g.format(x) + "\t" + g.format(y) + "\t" + g.format(z) + "\t" + detail::delta_text(p) + "\t" +
                 (pos ? "yes" : "no") + "\n";
        }
      }
  }
  return {all_positive ? exit_code::ok : exit_code::fails, out};
}

}  // namespace gtl
