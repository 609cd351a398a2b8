#pragma once

#include <set>

#include "gtl/combination.hpp"
#include "gtl/errors.hpp"

namespace gtl {

/**
 * Unitriangular bar-solve.
 *
 * Given the bar involution on a standard basis {b_y}, bar(b_y) = sum_x r(x,y) b_x
 * with r(x,y) = 0 unless x precedes y, find the unique bar-invariant element
 *   b_top + sum_{x != top} a_x b_x,   a_x in v^-1 Z[v^-1].
 *
 * `bar_of(y)` returns bar(b_y). `before(x, y)` must be a strict order extending
 * the triangularity: r(x,y) != 0 with x != y implies before(x, y) is false and
 * before(y, x) is true. Coordinates are solved in decreasing `before` order.
 */
template <class Key, class BarOf, class Before>
SparseCombination<Key> bar_solve(const Key& top, BarOf&& bar_of, Before&& before) {
  auto later_first = [&](const Key& a, const Key& b) { return before(b, a); };
  std::set<Key, decltype(later_first)> queue(later_first);
  SparseCombination<Key> a(top);
  LaurentPoly one(1);
  for (const auto& [x, r] : bar_of(top).terms())
    if (x != top) queue.insert(x);
  while (!queue.empty()) {
    Key x = *queue.begin();
    queue.erase(queue.begin());
    // rhs = sum_{y != x} bar(a_y) r(x, y)
    LaurentPoly rhs;
    for (const auto& [y, ay] : a.terms()) {
      if (y == x) continue;
      LaurentPoly r = bar_of(y).coeff(x);
      if (!r.is_zero()) rhs += bar(ay) * r;
    }
    if (rhs.is_zero()) continue;
    // a_x - bar(a_x) = rhs, with a_x strictly negative in v
    LaurentPoly ax;
    for (const auto& [e, c] : rhs.terms())
      if (e < 0) ax.add_term(e, c);
    if (!(ax - bar(ax) == rhs)) throw ConsistencyError("bar-solve: right-hand side is not antisymmetric");
    a.add(x, ax);
    for (const auto& [z, r] : bar_of(x).terms())
      if (z != x) queue.insert(z);
  }
  return a;
}

}  // namespace gtl
