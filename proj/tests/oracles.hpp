#pragma once

// Independent reference implementations used only by tests. Nothing here shares code
// paths with the library beyond the Cell/CellSet value types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "holey/cell.hpp"

namespace oracle {

using holey::Cell;
using holey::CellSet;

// Lee code words by filtering all q^d points.
inline std::set<std::vector<std::int64_t>> lee_words_by_filter(std::size_t d) {
  const std::int64_t q = 2 * static_cast<std::int64_t>(d) + 1;
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> p(d, 0);
  while (true) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d; ++i) s += static_cast<std::int64_t>(i + 1) * p[i];
    if (s % q == 0) out.insert(p);
    std::size_t k = 0;
    for (; k < d; ++k) {
      if (++p[k] < q) break;
      p[k] = 0;
    }
    if (k == d) break;
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Holes by union-find over the complement of the bounding box inflated by one layer,
// addressing cells through a std::map rather than a dense stride grid.
inline std::uint64_t holes_union_find(const CellSet& s) {
  if (s.empty()) return 0;
  const std::size_t d = s.dim();
  auto box = s.bounds();
  for (std::size_t k = 0; k < d; ++k) {
    box.lo[k] -= 1;
    box.hi[k] += 1;
  }
  std::map<Cell, std::size_t> id;
  std::vector<Cell> empties;
  Cell c = box.lo;
  while (true) {
    if (!s.contains(c)) {
      id[c] = empties.size();
      empties.push_back(c);
    }
    std::size_t k = 0;
    for (; k < d; ++k) {
      if (++c[k] <= box.hi[k]) break;
      c[k] = box.lo[k];
    }
    if (k == d) break;
  }
  UnionFind uf(empties.size() + 1);
  const std::size_t outside = empties.size();
  for (std::size_t i = 0; i < empties.size(); ++i) {
    const Cell& e = empties[i];
    for (std::size_t k = 0; k < d; ++k) {
      if (e[k] == box.lo[k] || e[k] == box.hi[k]) uf.unite(i, outside);
      Cell nb = e;
      nb[k] += 1;
      if (auto it = id.find(nb); it != id.end()) uf.unite(i, it->second);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < empties.size(); ++i) roots.insert(uf.find(i));
  roots.erase(uf.find(outside));
  return roots.size();
}

// Face classification against a set-based hole map.
struct NaiveCensus {
  std::uint64_t b = 0, p_h = 0, p_o = 0;
};

inline NaiveCensus census_by_sets(const CellSet& s) {
  NaiveCensus out;
  if (s.empty()) return out;
  const std::size_t d = s.dim();
  // Outside = complement cells reachable from outside the bounding box.
  auto box = s.bounds();
  for (std::size_t k = 0; k < d; ++k) {
    box.lo[k] -= 1;
    box.hi[k] += 1;
  }
  std::set<Cell> outer{box.lo};
  std::vector<Cell> todo{box.lo};
  while (!todo.empty()) {
    Cell c = todo.back();
    todo.pop_back();
    for (std::size_t k = 0; k < d; ++k) {
      for (int step : {-1, 1}) {
        Cell nb = c;
        nb[k] += step;
        if (nb[k] < box.lo[k] || nb[k] > box.hi[k] || s.contains(nb) || outer.count(nb)) continue;
        outer.insert(nb);
        todo.push_back(nb);
      }
    }
  }
  std::uint64_t shared = 0;
  for (const auto& c : s) {
    for (std::size_t k = 0; k < d; ++k) {
      for (int step : {-1, 1}) {
        Cell nb = c;
        nb[k] += step;
        if (s.contains(nb)) {
          ++shared;
        } else if (outer.count(nb)) {
          ++out.p_o;
        } else {
          ++out.p_h;
        }
      }
    }
  }
  out.b = shared / 2;
  return out;
}

inline bool connected_by_sets(const CellSet& s) {
  if (s.empty()) return false;
  std::set<Cell> seen{*s.begin()};
  std::vector<Cell> todo{*s.begin()};
  while (!todo.empty()) {
    Cell c = todo.back();
    todo.pop_back();
    for (std::size_t k = 0; k < s.dim(); ++k) {
      for (int step : {-1, 1}) {
        Cell nb = c;
        nb[k] += step;
        if (s.contains(nb) && seen.insert(nb).second) todo.push_back(nb);
      }
    }
  }
  return seen.size() == s.size();
}

// Translate so the lexicographically smallest cell is the origin.
inline std::vector<Cell> normalized(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  const Cell base = cells.front();
  for (auto& c : cells) c -= base;
  return cells;
}

// All fixed n-ominoes by level-wise growth with a set of normal forms.
inline std::vector<CellSet> all_fixed_polyominoes(std::size_t d, std::size_t n) {
  std::set<std::vector<Cell>> level{{Cell(d)}};
  for (std::size_t size = 1; size < n; ++size) {
    std::set<std::vector<Cell>> next;
    for (const auto& poly : level) {
      std::set<Cell> members(poly.begin(), poly.end());
      for (const auto& c : poly) {
        for (std::size_t k = 0; k < d; ++k) {
          for (int step : {-1, 1}) {
            Cell nb = c;
            nb[k] += step;
            if (members.count(nb)) continue;
            std::vector<Cell> grown = poly;
            grown.push_back(nb);
            next.insert(normalized(std::move(grown)));
          }
        }
      }
    }
    level = std::move(next);
  }
  std::vector<CellSet> out;
  for (const auto& p : level) out.emplace_back(d, p);
  return out;
}

// Largest h with 2dh <= 2dn - 2(n-1) - 2d (n+h)^((d-1)/d), by a floating-point scan.
inline std::uint64_t upper_bound_scan(std::size_t d, std::uint64_t n) {
  const double dd = static_cast<double>(d);
  std::uint64_t best = 0;
  for (std::uint64_t h = 0; h <= (d - 1) * n; ++h) {
    const double lhs = 2 * dd * static_cast<double>(h);
    const double rhs = 2 * dd * static_cast<double>(n) - 2.0 * (static_cast<double>(n) - 1) -
                       2 * dd * std::pow(static_cast<double>(n + h), (dd - 1) / dd);
    if (lhs <= rhs + 1e-9) best = h;
  }
  return best;
}

// Determinant by cofactor expansion.
inline std::int64_t det_by_cofactors(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    det += ((j % 2) ? -1 : 1) * m[0][j] * det_by_cofactors(minor);
  }
  return det;
}

// x is in the row lattice of B iff x * adj(B) is divisible by det(B) in every coordinate.
struct AdjugateMembership {
  std::vector<std::vector<std::int64_t>> adj;  // adj[i][j]
  std::int64_t det = 0;

  explicit AdjugateMembership(const std::vector<std::vector<std::int64_t>>& b) {
    const std::size_t n = b.size();
    det = det_by_cofactors(b);
    adj.assign(n, std::vector<std::int64_t>(n, 0));
    if (n == 1) {
      adj[0][0] = 1;
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == i) continue;
          std::vector<std::int64_t> row;
          for (std::size_t c = 0; c < n; ++c)
            if (c != j) row.push_back(b[r][c]);
          minor.push_back(row);
        }
        // adj = cofactor^T
        adj[j][i] = (((i + j) % 2) ? -1 : 1) * det_by_cofactors(minor);
      }
    }
  }

  bool contains(const std::vector<std::int64_t>& x) const {
    const std::size_t n = x.size();
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s += x[i] * adj[i][j];
      if (s % det != 0) return false;
    }
    return true;
  }
};

// Shortest nonzero squared norm over all integer points with |x_i| <= radius.
inline std::int64_t naive_systole_squared(const std::vector<std::vector<std::int64_t>>& basis, std::int64_t radius) {
  const std::size_t d = basis.size();
  const AdjugateMembership member(basis);
  std::vector<std::int64_t> x(d, -radius);
  std::int64_t best = -1;
  while (true) {
    std::int64_t n2 = 0;
    for (auto v : x) n2 += v * v;
    if (n2 > 0 && (best < 0 || n2 < best) && member.contains(x)) best = n2;
    std::size_t k = 0;
    for (; k < d; ++k) {
      if (++x[k] <= radius) break;
      x[k] = -radius;
    }
    if (k == d) break;
  }
  return best;
}

}  // namespace oracle
