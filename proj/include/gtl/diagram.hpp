#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "gtl/coxeter_group.hpp"
#include "gtl/errors.hpp"

namespace gtl {

/**
 * Temperley-Lieb diagram on n strands.
 *
 * Boundary points are numbered north 0..n-1 then south n..2n-1 and
 * `partner` is the non-crossing perfect matching. `loops` counts closed
 * loops removed so far.
 */
struct PlanarDiagram {
  int strands = 0;
  std::vector<int> partner;
  int loops = 0;

  int north(int k) const { return k; }
  int south(int k) const { return strands + k; }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

inline PlanarDiagram identity_diagram(int strands) {
  if (strands < 1) throw PreconditionError("a diagram needs at least one strand");
  PlanarDiagram d{strands, std::vector<int>(static_cast<std::size_t>(2 * strands)), 0};
  for (int k = 0; k < strands; ++k) {
    d.partner[k] = strands + k;
    d.partner[strands + k] = k;
  }
  return d;
}

/// E_i, 1 <= i <= strands - 1: cap on north i, i+1 and cup on south i, i+1.
inline PlanarDiagram generator_diagram(int i, int strands) {
  if (i < 1 || i > strands - 1)
    throw PreconditionError("generator index " + std::to_string(i) + " out of range for " + std::to_string(strands) +
                            " strands");
  PlanarDiagram d = identity_diagram(strands);
  int a = i - 1, b = i;
  d.partner[a] = b;
  d.partner[b] = a;
  d.partner[strands + a] = strands + b;
  d.partner[strands + b] = strands + a;
  return d;
}

/// a stacked on top of b.
inline PlanarDiagram diagram_mul(const PlanarDiagram& a, const PlanarDiagram& b) {
  if (a.strands != b.strands) throw PreconditionError("strand counts differ");
  const int n = a.strands;
  // combined points: a uses 0..2n-1, b uses 2n..4n-1; a.south k is glued to b.north k
  auto partner = [&](int p) { return p < 2 * n ? a.partner[p] : 2 * n + b.partner[p - 2 * n]; };
  auto glued = [&](int p) -> int {
    if (p >= n && p < 2 * n) return 2 * n + (p - n);
    if (p >= 2 * n && p < 3 * n) return n + (p - 2 * n);
    return -1;
  };
  auto outer_index = [&](int p) { return p < n ? p : n + (p - 3 * n); };

  PlanarDiagram out{n, std::vector<int>(static_cast<std::size_t>(2 * n), -1), a.loops + b.loops};
  std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
  std::vector<int> starts(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    starts[k] = k;
    starts[n + k] = 3 * n + k;
  }
  for (int start : starts) {
    if (seen[start]) continue;
    int p = start;
    seen[p] = 1;
    while (true) {
      int q = partner(p);
      seen[q] = 1;
      int r = glued(q);
      if (r < 0) {
        out.partner[outer_index(start)] = outer_index(q);
        out.partner[outer_index(q)] = outer_index(start);
        break;
      }
      seen[r] = 1;
      p = r;
    }
  }
  // whatever is left in the middle closes up into loops
  for (int p = n; p < 3 * n; ++p) {
    if (seen[p]) continue;
    ++out.loops;
    int q = p;
    do {
      seen[q] = 1;
      int r = partner(q);
      seen[r] = 1;
      q = glued(r);
    } while (!seen[q]);
  }
  return out;
}

/// Loops formed by joining north k to south k for every k.
inline int closure_loops(const PlanarDiagram& d) {
  const int n = d.strands;
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  int loops = 0;
  for (int p = 0; p < 2 * n; ++p) {
    if (seen[p]) continue;
    ++loops;
    int q = p;
    while (!seen[q]) {
      seen[q] = 1;
      int r = d.partner[q];
      seen[r] = 1;
      q = r < n ? r + n : r - n;
    }
  }
  return loops;
}

/// No two arcs cross.
inline bool is_planar(const PlanarDiagram& d) {
  // walk the boundary as a circle: north 0..n-1, then south n-1..0
  const int n = d.strands;
  std::vector<int> pos(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    pos[k] = k;
    pos[n + k] = 2 * n - 1 - k;
  }
  for (int p = 0; p < 2 * n; ++p) {
    if (d.partner[d.partner[p]] != p || d.partner[p] == p) return false;
    for (int q = 0; q < 2 * n; ++q) {
      int a = pos[p], b = pos[d.partner[p]], c = pos[q], e = pos[d.partner[q]];
      if (a > b) std::swap(a, b);
      if (c > e) std::swap(c, e);
      if (a < c && c < b && b < e) return false;
    }
  }
  return true;
}

/// Product of E_i along the canonical reduced word of w (type A_n, n+1 strands).
inline PlanarDiagram diagram_of(const CoxeterGroup& g, Element w) {
  int strands = g.rank() + 1;
  PlanarDiagram d = identity_diagram(strands);
  for (Gen s : g.word(w)) d = diagram_mul(d, generator_diagram(s + 1, strands));
  return d;
}

}  // namespace gtl
