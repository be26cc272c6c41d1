#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "holey/cell.hpp"
#include "holey/grid.hpp"
#include "holey/polyomino.hpp"

namespace holey {

// Selects the slice of the search tree a worker explores: nodes at depth `split_depth`
// are numbered in visit order and worker `worker` owns those with number % workers == worker.
struct WorkUnit {
  std::size_t worker = 0;
  std::size_t workers = 1;
  std::size_t split_depth = 4;
};

// Largest n enumerated without an explicit override, per dimension.
inline std::uint64_t default_enumeration_limit(std::size_t d) {
  switch (d) {
    case 2: return 12;
    case 3: return 8;
    case 4: return 7;
    default: return 6;
  }
}

// Redelmeier's algorithm, generalised to Z^d. Every fixed n-omino is produced exactly once,
// translated so that its lexicographically smallest cell is the origin. `visit` receives
// the cells in insertion order.
template <class Visit>
void for_each_fixed_polyomino(std::size_t d, std::size_t n, Visit&& visit, WorkUnit unit = {}) {
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("dimension out of range");
  if (n < 1) throw std::invalid_argument("tile count must be at least 1");

  // Axis 0 ranges over [0, n-1], the others over [-(n-1), n-1]; one extra blocked layer.
  const auto reach = static_cast<std::int64_t>(n - 1);
  BoundingBox box{Cell(d), Cell(d)};
  for (std::size_t k = 0; k < d; ++k) {
    box.lo[k] = k == 0 ? 0 : -reach;
    box.hi[k] = reach;
  }
  const GridIndex g(box, 1, std::uint64_t{1} << 32);
  // 0 free, 1 blocked (outside or lexicographically below the origin), 2 seen
  std::vector<std::uint8_t> state(g.size(), 1);
  const Cell origin(d);
  for (std::size_t at = 0; at < g.size(); ++at) {
    if (g.near_boundary(at, 1)) continue;
    if (g.cell_at(at) > origin) state[at] = 0;
  }
  const auto offsets = g.face_offsets();

  std::vector<std::size_t> poly;
  poly.reserve(n);
  std::vector<Cell> cells(n, Cell(d));
  std::uint64_t split_counter = 0;

  auto emit = [&] {
    for (std::size_t k = 0; k < poly.size(); ++k) cells[k] = g.cell_at(poly[k]);
    visit(std::span<const Cell>(cells.data(), poly.size()));
  };

  auto recurse = [&](auto& self, std::vector<std::size_t> untried) -> void {
    while (!untried.empty()) {
      const std::size_t c = untried.back();
      untried.pop_back();
      poly.push_back(c);
      bool mine = true;
      if (poly.size() == unit.split_depth) {
        mine = (split_counter++ % unit.workers) == unit.worker;
      }
      if (mine) {
        if (poly.size() == n) {
          if (unit.split_depth <= n || unit.worker == 0) emit();
        } else {
          std::vector<std::size_t> next = untried;
          std::vector<std::size_t> added;
          for (auto off : offsets) {
            const auto nb = static_cast<std::size_t>(static_cast<std::int64_t>(c) + off);
            if (state[nb] == 0) {
              state[nb] = 2;
              next.push_back(nb);
              added.push_back(nb);
            }
          }
          self(self, std::move(next));
          for (auto a : added) state[a] = 0;
        }
      }
      poly.pop_back();
    }
  };

  const std::size_t root = g.index(origin);
  state[root] = 2;
  recurse(recurse, {root});
}

inline bool lex_less(const CellSet& a, const CellSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct EnumerationResult {
  std::uint64_t count = 0;       // fixed polyominoes visited
  std::uint64_t max_holes = 0;
  std::optional<CellSet> witness;  // lexicographically smallest set attaining max_holes
};

// f_d(n) by exhaustive enumeration of fixed n-ominoes.
inline EnumerationResult brute_force_max_holes(std::size_t d, std::size_t n, unsigned jobs = 1,
                                               std::optional<std::uint64_t> limit = std::nullopt) {
  const std::uint64_t max_n = limit.value_or(default_enumeration_limit(d));
  if (n > max_n) {
    throw CapacityError("exhaustive enumeration of " + std::to_string(d) + "-dimensional " + std::to_string(n) +
                        "-ominoes exceeds the limit n <= " + std::to_string(max_n));
  }
  jobs = std::max(1u, jobs);

  std::vector<EnumerationResult> partial(jobs);
  auto work = [&](std::size_t w) {
    EnumerationResult& r = partial[w];
    for_each_fixed_polyomino(
        d, n,
        [&](std::span<const Cell> cells) {
          ++r.count;
          CellSet s(d, std::vector<Cell>(cells.begin(), cells.end()));
          const std::uint64_t h = holes(s).count;
          if (!r.witness || h > r.max_holes || (h == r.max_holes && lex_less(s, *r.witness))) {
            r.max_holes = h;
            r.witness = std::move(s);
          }
        },
        WorkUnit{w, jobs, 4});
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  EnumerationResult total;
  for (auto& r : partial) {
    total.count += r.count;
    if (!r.witness) continue;
    if (!total.witness || r.max_holes > total.max_holes ||
        (r.max_holes == total.max_holes && lex_less(*r.witness, *total.witness))) {
      total.max_holes = r.max_holes;
      total.witness = std::move(r.witness);
    }
  }
  return total;
}

}  // namespace holey
