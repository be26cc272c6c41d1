#pragma once

#include <cstdint>
#include <vector>

#include "holey/cell.hpp"
#include "holey/grid.hpp"

namespace holey {

// Face classification of a cell set: interior faces (b, each counted once), faces bounding
// a hole (p_h) and faces on the outer perimeter (p_o).
struct FaceCensus {
  std::size_t dim = 0;
  std::uint64_t n = 0;
  std::uint64_t b = 0;
  std::uint64_t p_h = 0;
  std::uint64_t p_o = 0;
  std::uint64_t holes = 0;

  bool identity_holds() const { return 2 * dim * n == p_o + 2 * b + p_h; }
  friend bool operator==(const FaceCensus&, const FaceCensus&) = default;
};

struct HoleReport {
  std::uint64_t count = 0;
  std::vector<std::vector<Cell>> components;  // one entry per hole, cells sorted
};

namespace detail {

inline constexpr std::int32_t kOccupied = -1;
inline constexpr std::int32_t kWall = -2;
inline constexpr std::int32_t kOuter = 0;

// Labels every complement cell of the set's bounding box (inflated by one free layer and
// one wall layer) with its face-connected component. Label 0 is the unbounded component;
// labels 1..holes are holes.
struct ComplementLabels {
  GridIndex grid;
  std::vector<std::int32_t> label;
  std::uint64_t holes = 0;
};

inline ComplementLabels label_complement(const CellSet& s, std::uint64_t budget) {
  ComplementLabels out{GridIndex(s.bounds(), 2, budget), {}, 0};
  const GridIndex& g = out.grid;
  auto& label = out.label;
  constexpr std::int32_t kUnseen = -3;
  label.assign(g.size(), kUnseen);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.near_boundary(i, 1)) label[i] = kWall;
  }
  for (const auto& c : s) label[g.index(c)] = kOccupied;

  const auto offsets = g.face_offsets();
  std::vector<std::size_t> stack;
  auto flood = [&](std::size_t seed, std::int32_t id) {
    label[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t at = stack.back();
      stack.pop_back();
      for (auto off : offsets) {
        const auto nb = static_cast<std::size_t>(static_cast<std::int64_t>(at) + off);
        if (label[nb] == kUnseen) {
          label[nb] = id;
          stack.push_back(nb);
        }
      }
    }
  };

  Cell corner = g.origin();
  for (std::size_t i = 0; i < g.dim(); ++i) corner[i] += 1;
  flood(g.index(corner), kOuter);
  std::int32_t next = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (label[i] == kUnseen) flood(i, next++);
  }
  out.holes = static_cast<std::uint64_t>(next - 1);
  return out;
}

}  // namespace detail

// Face connectivity of the cells. The empty set is not connected.
inline bool is_rook_connected(const CellSet& s, std::uint64_t budget = kDefaultCellBudget) {
  if (s.empty()) return false;
  GridIndex g(s.bounds(), 1, budget);
  std::vector<std::uint8_t> state(g.size(), 0);  // 0 empty, 1 occupied, 2 reached
  for (const auto& c : s) state[g.index(c)] = 1;
  const auto offsets = g.face_offsets();
  std::vector<std::size_t> stack{g.index(*s.begin())};
  state[stack.back()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t at = stack.back();
    stack.pop_back();
    for (auto off : offsets) {
      const auto nb = static_cast<std::size_t>(static_cast<std::int64_t>(at) + off);
      if (state[nb] == 1) {
        state[nb] = 2;
        ++reached;
        stack.push_back(nb);
      }
    }
  }
  return reached == s.size();
}

// Bounded face-connected components of the complement.
inline HoleReport holes(const CellSet& s, bool collect_components = false,
                        std::uint64_t budget = kDefaultCellBudget) {
  HoleReport report;
  if (s.empty()) return report;
  const auto labels = detail::label_complement(s, budget);
  report.count = labels.holes;
  if (collect_components) {
    report.components.resize(labels.holes);
    for (std::size_t i = 0; i < labels.label.size(); ++i) {
      const auto id = labels.label[i];
      if (id > 0) report.components[static_cast<std::size_t>(id - 1)].push_back(labels.grid.cell_at(i));
    }
  }
  return report;
}

inline FaceCensus face_census(const CellSet& s, std::uint64_t budget = kDefaultCellBudget) {
  FaceCensus census;
  census.dim = s.dim();
  if (s.empty()) return census;
  const auto labels = detail::label_complement(s, budget);
  const auto offsets = labels.grid.face_offsets();
  std::uint64_t shared = 0;
  for (const auto& c : s) {
    const auto at = static_cast<std::int64_t>(labels.grid.index(c));
    for (auto off : offsets) {
      const auto id = labels.label[static_cast<std::size_t>(at + off)];
      if (id == detail::kOccupied) {
        ++shared;
      } else if (id > 0) {
        ++census.p_h;
      } else {
        ++census.p_o;
      }
    }
  }
  census.n = s.size();
  census.b = shared / 2;
  census.holes = labels.holes;
  return census;
}

}  // namespace holey
