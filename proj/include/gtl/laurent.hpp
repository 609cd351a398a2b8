#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtl/errors.hpp"

namespace gtl {

/**
 * Laurent polynomial in v with coefficients in Int.
 *
 * Terms are kept sorted by exponent, no stored coefficient is zero.
 */
template <class Int>
class Laurent {
 public:
  using coefficient_type = Int;
  using Term = std::pair<int, Int>;

  Laurent() = default;
  Laurent(int c) { if (c != 0) terms_.emplace_back(0, Int(c)); }
  Laurent(const Int& c) { if (c != 0) terms_.emplace_back(0, c); }

  static Laurent monomial(const Int& c, int e) {
    Laurent p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }
  static Laurent v(int e = 1) { return monomial(Int(1), e); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }
  const Int& leading_coefficient() const { return terms_.back().second; }

  Int coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return Int(0);
  }

  void add_term(int e, const Int& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term(e, c));
    }
  }

  Laurent& operator+=(const Laurent& o) { return merge(o, 1); }
  Laurent& operator-=(const Laurent& o) { return merge(o, -1); }

  Laurent& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  // multiply by v^k
  Laurent shifted(int k) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Int& c) { return a *= c; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.terms_.size() == 1) {
      r = a.shifted(b.terms_[0].first);
      return r *= b.terms_[0].second;
    }
    if (a.terms_.size() == 1) {
      r = b.shifted(a.terms_[0].first);
      return r *= a.terms_[0].second;
    }
    const int lo = a.min_exponent() + b.min_exponent();
    const int hi = a.max_exponent() + b.max_exponent();
    std::vector<Int> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb - lo] += ca * cb;
    for (int i = 0; i <= hi - lo; ++i)
      if (acc[i] != 0) r.terms_.emplace_back(lo + i, std::move(acc[i]));
    return r;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

 private:
  Laurent& merge(const Laurent& o, int sign) {
    if (o.is_zero()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, sign > 0 ? j->second : Int(-j->second));
        ++j;
      } else {
        Int c = sign > 0 ? Int(i->second + j->second) : Int(i->second - j->second);
        if (c != 0) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  std::vector<Term> terms_;
};

using Integer = boost::multiprecision::cpp_int;
using LaurentPoly = Laurent<Integer>;

template <class Int>
Laurent<Int> bar(const Laurent<Int>& p) {
  Laurent<Int> r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

template <class Int>
Int coeff(const Laurent<Int>& p, int n) {
  return p.coeff(n);
}

// delta = v + v^-1
template <class Int = Integer>
Laurent<Int> delta_poly() {
  return Laurent<Int>::v(1) + Laurent<Int>::v(-1);
}

template <class Int>
Laurent<Int> power(const Laurent<Int>& p, int n) {
  Laurent<Int> r(1);
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

// keep only the terms whose exponent has the given parity
template <class Int>
Laurent<Int> homogenize(const Laurent<Int>& p, int parity) {
  Laurent<Int> r;
  for (const auto& [e, c] : p.terms())
    if (((e % 2) + 2) % 2 == ((parity % 2) + 2) % 2) r.add_term(e, c);
  return r;
}

template <class Int>
bool is_bar_invariant(const Laurent<Int>& p) {
  return bar(p) == p;
}

/// Polynomial in delta, coefficient i is the coefficient of delta^i.
template <class Int>
struct DeltaPoly {
  std::vector<Int> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int coeff(int i) const { return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : Int(0); }

  Laurent<Int> expand() const {
    Laurent<Int> r, d = delta_poly<Int>(), pw(1);
    for (const auto& c : coeffs) {
      r += pw * c;
      pw *= d;
    }
    return r;
  }

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.coeffs == b.coeffs; }
};

/// Rewrite a bar-invariant polynomial in powers of delta.
/// Returns nullopt when p is not bar-invariant.
template <class Int>
std::optional<DeltaPoly<Int>> to_delta_basis(const Laurent<Int>& p) {
  DeltaPoly<Int> out;
  Laurent<Int> rest = p;
  const Laurent<Int> d = delta_poly<Int>();
  while (!rest.is_zero()) {
    if (!is_bar_invariant(rest)) return std::nullopt;
    int k = rest.max_exponent();
    Int c = rest.leading_coefficient();
    if (static_cast<int>(out.coeffs.size()) <= k) out.coeffs.resize(k + 1);
    out.coeffs[k] += c;
    rest -= power(d, k) * c;
  }
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

template <class Int>
bool is_nonneg_delta(const Laurent<Int>& p) {
  auto d = to_delta_basis(p);
  if (!d) return false;
  return std::all_of(d->coeffs.begin(), d->coeffs.end(), [](const Int& c) { return c >= 0; });
}

namespace detail {

template <class Int>
std::string int_text(const Int& c) {
  if constexpr (std::is_integral_v<Int>) {
    return std::to_string(c);
  } else {
    return c.str();
  }
}

// shared renderer: exponents descending, `sym` is the variable name
template <class Int>
std::string render_terms(const std::vector<std::pair<int, Int>>& desc, const std::string& sym) {
  if (desc.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : desc) {
    bool neg = c < 0;
    Int a = neg ? Int(-c) : c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += int_text(a);
      continue;
    }
    if (a != 1) s += int_text(a);
    s += sym;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace detail

template <class Int>
std::string to_string(const Laurent<Int>& p) {
  std::vector<std::pair<int, Int>> desc(p.terms().rbegin(), p.terms().rend());
  return detail::render_terms(desc, "v");
}

template <class Int>
std::string to_string(const DeltaPoly<Int>& d) {
  std::vector<std::pair<int, Int>> desc;
  for (int i = d.degree(); i >= 0; --i)
    if (d.coeffs[i] != 0) desc.emplace_back(i, d.coeffs[i]);
  return detail::render_terms(desc, "δ");
}

/// Parse text such as "v^2 - 3 + 2v^-1" or "3*v^-3". Exponents may repeat.
template <class Int = Integer>
Laurent<Int> parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  Laurent<Int> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t& k) {
    std::size_t st = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return s.substr(st, k - st);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected + or - in '" + std::string(text) + "'");
    }
    first = false;
    std::string num = digits(i);
    Int c = num.empty() ? Int(1) : Int(num);
    int e = 0;
    if (i < s.size() && s[i] == '*') {
      if (num.empty()) throw ParseError("dangling * in '" + std::string(text) + "'");
      ++i;
      if (i >= s.size() || s[i] != 'v') throw ParseError("expected v after * in '" + std::string(text) + "'");
    }
    if (i < s.size() && s[i] == 'v') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int es = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          es = s[i] == '-' ? -1 : 1;
          ++i;
        }
        std::string ed = digits(i);
        if (ed.empty()) throw ParseError("missing exponent in '" + std::string(text) + "'");
        e = es * std::stoi(ed);
      }
    } else if (num.empty()) {
      throw ParseError("malformed term in '" + std::string(text) + "'");
    }
    out.add_term(e, sign > 0 ? c : Int(-c));
  }
  return out;
}

}  // namespace gtl
