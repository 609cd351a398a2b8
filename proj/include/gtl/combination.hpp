#pragma once

#include <map>
#include <vector>

#include "gtl/laurent.hpp"

namespace gtl {

/// Finite linear combination of basis keys with Laurent coefficients.
template <class Key, class Coeff = LaurentPoly>
class SparseCombination {
 public:
  using map_type = std::map<Key, Coeff>;

  SparseCombination() = default;
  SparseCombination(const Key& k, Coeff c = Coeff(1)) { add(k, c); }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add(const Key& k, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // this += c * other
  void add_scaled(const SparseCombination& other, const Coeff& c) {
    if (c.is_zero()) return;
    for (const auto& [k, a] : other.terms_) add(k, a * c);
  }

  SparseCombination& operator+=(const SparseCombination& o) {
    for (const auto& [k, a] : o.terms_) add(k, a);
    return *this;
  }
  SparseCombination& operator-=(const SparseCombination& o) {
    for (const auto& [k, a] : o.terms_) add(k, -a);
    return *this;
  }
  SparseCombination& operator*=(const Coeff& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, a] : terms_) a = a * c;
    return *this;
  }

  friend SparseCombination operator+(SparseCombination a, const SparseCombination& b) { return a += b; }
  friend SparseCombination operator-(SparseCombination a, const SparseCombination& b) { return a -= b; }
  friend SparseCombination operator*(SparseCombination a, const Coeff& c) { return a *= c; }
  friend bool operator==(const SparseCombination& a, const SparseCombination& b) { return a.terms_ == b.terms_; }

  template <class F>
  SparseCombination map_coefficients(F&& f) const {
    SparseCombination r;
    for (const auto& [k, a] : terms_) r.add(k, f(a));
    return r;
  }

  template <class F>
  SparseCombination map_keys(F&& f) const {
    SparseCombination r;
    for (const auto& [k, a] : terms_) r.add(f(k), a);
    return r;
  }

 private:
  map_type terms_;
};

}  // namespace gtl
