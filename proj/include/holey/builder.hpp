#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "holey/cell.hpp"
#include "holey/grid.hpp"
#include "holey/lee_code.hpp"
#include "holey/pattern.hpp"
#include "holey/polyomino.hpp"

namespace holey {

struct BuildReport {
  FaceCensus census;
  std::uint64_t vol_domain = 0;
  std::uint64_t vol_shell = 0;
  std::uint64_t band = 0;           // i such that Q_i <= D_m <= Q_{i+1}; 0 when no domain was used
  std::uint64_t parallelotopes = 0; // m, the number of fundamental parallelotopes in the interior
};

struct Construction {
  CellSet polyomino;
  BuildReport report;
};

// Cells of `domain` with a complement cell at L-infinity distance one.
inline CellSet shell(const CellSet& domain, std::uint64_t budget = kDefaultCellBudget) {
  if (domain.empty()) return CellSet(domain.dim());
  GridIndex g(domain.bounds(), 1, budget);
  std::vector<std::uint8_t> in(g.size(), 0);
  for (const auto& c : domain) in[g.index(c)] = 1;
  const auto offsets = g.king_offsets();
  std::vector<Cell> out;
  for (const auto& c : domain) {
    const auto at = static_cast<std::int64_t>(g.index(c));
    for (auto off : offsets) {
      if (!in[static_cast<std::size_t>(at + off)]) {
        out.push_back(c);
        break;
      }
    }
  }
  return CellSet(domain.dim(), std::move(out));
}

// Number of fundamental parallelotopes (q x 1 x ... x 1 x 2) tiling the interior of Q_i.
inline std::uint64_t parallelotope_count(std::size_t d, std::uint64_t i) {
  check_pattern_dim(d);
  return ipow(4 * d - 2, d - 1) * ipow(i, d);
}

// Side length 2qi+2 of the cube Q_i.
inline std::int64_t cube_side(std::size_t d, std::uint64_t i) {
  return 2 * pattern_modulus(d) * static_cast<std::int64_t>(i) + 2;
}

// Closed-form tile count of P(Q_i): full shell plus the K_d density of the interior.
inline std::uint64_t cube_polyomino_volume(std::size_t d, std::uint64_t i) {
  const auto side = static_cast<std::uint64_t>(cube_side(d, i));
  const std::uint64_t inner = ipow(side - 2, d);
  return ipow(side, d) - inner + inner / (2 * d - 1) * d;
}

namespace detail {

inline BoundingBox cube_box(std::size_t d, std::int64_t side) {
  BoundingBox box{Cell(d), Cell(d)};
  for (std::size_t k = 0; k < d; ++k) box.hi[k] = side - 1;
  return box;
}

// Calls fn(cell) for every cell of [lo, lo+extent) in lexicographic order.
template <class Fn>
void for_each_in_box(const Cell& lo, std::span<const std::int64_t> extent, Fn&& fn) {
  const std::size_t d = lo.dim();
  for (auto e : extent) {
    if (e <= 0) return;
  }
  Cell c = lo;
  while (true) {
    fn(c);
    std::size_t k = d;
    while (k-- > 0) {
      if (++c[k] < lo[k] + extent[k]) break;
      c[k] = lo[k];
    }
    if (k == static_cast<std::size_t>(-1)) return;
  }
}

inline std::uint64_t band_for(std::size_t d, std::uint64_t m) {
  if (m < parallelotope_count(d, 1)) {
    throw std::invalid_argument("parallelotope count " + std::to_string(m) + " is below the first band (" +
                                std::to_string(parallelotope_count(d, 1)) + ")");
  }
  std::uint64_t i = 1;
  while (parallelotope_count(d, i + 1) <= m) ++i;
  return i;
}

}  // namespace detail

// P(D): the shell of D together with the K_d cells of its interior.
inline Construction polyomino_from_domain(const CellSet& domain, std::uint64_t budget = kDefaultCellBudget) {
  const std::size_t d = domain.dim();
  check_pattern_dim(d);
  CellSet sh = shell(domain, budget);
  std::vector<Cell> cells;
  cells.reserve(domain.size());
  for (const auto& c : domain) {
    if (sh.contains(c) || kd_contains(d, c)) cells.push_back(c);
  }
  Construction out{CellSet(d, std::move(cells)), {}};
  out.report.vol_domain = domain.size();
  out.report.vol_shell = sh.size();
  out.report.census = face_census(out.polyomino, budget);
  return out;
}

// D_m: the interior of Q_i plus the first m - count(i) parallelotopes of the interior of
// Q_{i+1} (lexicographic in their lowest corner, axis 0 most significant), surrounded by
// a one-cell-thick L-infinity shell. Both interiors are anchored at (1, ..., 1).
inline CellSet interpolated_domain(std::size_t d, std::uint64_t m, std::uint64_t budget = kDefaultCellBudget) {
  check_pattern_dim(d);
  const std::uint64_t i = detail::band_for(d, m);
  const std::int64_t q = pattern_modulus(d);
  const std::int64_t inner_small = cube_side(d, i) - 2;
  const std::int64_t inner_big = cube_side(d, i + 1) - 2;
  const std::int64_t small_end = 1 + inner_small;

  GridIndex g(detail::cube_box(d, inner_big + 2), 1, budget);
  std::vector<std::uint8_t> core(g.size(), 0);

  Cell interior_corner(d);
  for (std::size_t k = 0; k < d; ++k) interior_corner[k] = 1;
  std::vector<std::int64_t> small_extent(d, inner_small);
  detail::for_each_in_box(interior_corner, small_extent, [&](const Cell& c) { core[g.index(c)] = 1; });

  std::vector<std::int64_t> brick(d, 1);
  brick[0] = q;
  brick[d - 1] = 2;
  std::vector<std::int64_t> corner_counts(d);
  for (std::size_t k = 0; k < d; ++k) corner_counts[k] = inner_big / brick[k];

  std::uint64_t remaining = m - parallelotope_count(d, i);
  detail::for_each_in_box(Cell(d), corner_counts, [&](const Cell& slot) {
    if (remaining == 0) return;
    Cell corner(d);
    bool inside_small = true;
    for (std::size_t k = 0; k < d; ++k) {
      corner[k] = 1 + slot[k] * brick[k];
      inside_small = inside_small && corner[k] < small_end;
    }
    if (inside_small) return;
    --remaining;
    detail::for_each_in_box(corner, brick, [&](const Cell& c) { core[g.index(c)] = 1; });
  });

  const auto offsets = g.king_offsets();
  std::vector<Cell> cells;
  for (std::size_t at = 0; at < g.size(); ++at) {
    if (g.near_boundary(at, 1)) continue;
    bool member = core[at] != 0;
    for (std::size_t k = 0; !member && k < offsets.size(); ++k) {
      member = core[static_cast<std::size_t>(static_cast<std::int64_t>(at) + offsets[k])] != 0;
    }
    if (member) cells.push_back(g.cell_at(at));
  }
  return CellSet(d, std::move(cells));
}

inline CellSet cube_domain(std::size_t d, std::uint64_t i, std::uint64_t budget = kDefaultCellBudget) {
  check_pattern_dim(d);
  if (i < 1) throw std::invalid_argument("cube index must be at least 1");
  const std::int64_t side = cube_side(d, i);
  check_budget(ipow(static_cast<std::uint64_t>(side + 2), d), budget, "cube_domain");
  std::vector<Cell> cells;
  cells.reserve(ipow(static_cast<std::uint64_t>(side), d));
  std::vector<std::int64_t> extent(d, side);
  detail::for_each_in_box(Cell(d), extent, [&](const Cell& c) { cells.push_back(c); });
  return CellSet(d, std::move(cells));
}

inline Construction build_cube_polyomino(std::size_t d, std::uint64_t i, std::uint64_t budget = kDefaultCellBudget) {
  Construction out = polyomino_from_domain(cube_domain(d, i, budget), budget);
  out.report.band = i;
  out.report.parallelotopes = parallelotope_count(d, i);
  return out;
}

inline Construction build_interpolated(std::size_t d, std::uint64_t m, std::uint64_t budget = kDefaultCellBudget) {
  Construction out = polyomino_from_domain(interpolated_domain(d, m, budget), budget);
  out.report.band = detail::band_for(d, m);
  out.report.parallelotopes = m;
  return out;
}

// Tile count of P(D_m) without a flood fill.
inline std::uint64_t interpolated_volume(std::size_t d, std::uint64_t m, std::uint64_t budget = kDefaultCellBudget) {
  const CellSet domain = interpolated_domain(d, m, budget);
  const CellSet sh = shell(domain, budget);
  std::uint64_t n = sh.size();
  for (const auto& c : domain) {
    if (!sh.contains(c) && kd_contains(d, c)) ++n;
  }
  return n;
}

// Exactly n tiles, rook-connected. From vol(P(Q_1)) on, this is P(D_m) for the largest m
// with vol(P(D_m)) <= n, topped up with cells stacked above its highest layer.
inline Construction build_for_n(std::size_t d, std::uint64_t n, std::uint64_t budget = kDefaultCellBudget) {
  check_pattern_dim(d);
  if (n < 1) throw std::invalid_argument("tile count must be at least 1");

  if (n < cube_polyomino_volume(d, 1)) {
    std::int64_t side = 1;
    while (ipow(static_cast<std::uint64_t>(side), d) < n) ++side;
    std::vector<Cell> cells;
    cells.reserve(n);
    std::vector<std::int64_t> extent(d, side);
    detail::for_each_in_box(Cell(d), extent, [&](const Cell& c) {
      if (cells.size() < n) cells.push_back(c);
    });
    Construction out{CellSet(d, std::move(cells)), {}};
    out.report.census = face_census(out.polyomino, budget);
    return out;
  }

  std::uint64_t i = 1;
  while (cube_polyomino_volume(d, i + 1) <= n) ++i;
  check_budget(ipow(static_cast<std::uint64_t>(cube_side(d, i + 1) + 2), d), budget, "build_for_n");

  // vol(P(D_m)) is strictly increasing in m, so the largest feasible m is found by bisection.
  std::uint64_t lo = parallelotope_count(d, i);
  std::uint64_t hi = parallelotope_count(d, i + 1);  // vol(P(D_hi)) > n
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (interpolated_volume(d, mid, budget) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  Construction base = build_interpolated(d, lo, budget);
  std::uint64_t missing = n - base.polyomino.size();
  if (missing == 0) return base;

  const std::size_t up = d - 1;
  std::vector<Cell> cells(base.polyomino.begin(), base.polyomino.end());
  std::int64_t top = cells.front()[up];
  for (const auto& c : cells) top = std::max(top, c[up]);
  std::vector<Cell> layer;
  for (const auto& c : cells) {
    if (c[up] == top) layer.push_back(c);
  }
  // Each appended cell sits directly on a cell of the layer below, outside the bounding box.
  while (missing > 0) {
    std::vector<Cell> next;
    for (const auto& c : layer) {
      if (missing == 0) break;
      Cell above = c;
      ++above[up];
      next.push_back(above);
      cells.push_back(above);
      --missing;
    }
    layer = std::move(next);
  }

  Construction out{CellSet(d, std::move(cells)), base.report};
  out.report.census = face_census(out.polyomino, budget);
  return out;
}

}  // namespace holey
