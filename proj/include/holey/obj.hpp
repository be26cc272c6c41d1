#pragma once

#include <array>
#include <ostream>
#include <stdexcept>

#include "holey/cell.hpp"

namespace holey {

struct ObjStats {
  std::uint64_t vertices = 0;
  std::uint64_t faces = 0;
};

// Wavefront OBJ, one closed unit cube (8 vertices, 12 outward triangles) per cell.
// Vertices are not shared between cubes.
inline ObjStats write_obj(std::ostream& out, const CellSet& s) {
  if (s.dim() != 3) throw std::invalid_argument("OBJ export needs a 3-dimensional cell set");
  // Corner k has offset bit 0 -> x, bit 1 -> y, bit 2 -> z.
  static constexpr std::array<std::array<int, 3>, 12> kTriangles{{
      {1, 3, 4}, {1, 4, 2},  // z = 0 (1-based corner ids)
      {5, 6, 8}, {5, 8, 7},  // z = 1
      {1, 2, 6}, {1, 6, 5},  // y = 0
      {3, 7, 8}, {3, 8, 4},  // y = 1
      {1, 5, 7}, {1, 7, 3},  // x = 0
      {2, 4, 8}, {2, 8, 6},  // x = 1
  }};
  ObjStats stats;
  out << "# " << s.size() << " cubes\n";
  for (const auto& c : s) {
    for (int k = 0; k < 8; ++k) {
      out << "v " << static_cast<double>(c[0]) - 0.5 + (k & 1) << ' ' << static_cast<double>(c[1]) - 0.5 + ((k >> 1) & 1)
          << ' ' << static_cast<double>(c[2]) - 0.5 + ((k >> 2) & 1) << '\n';
    }
    const std::uint64_t base = stats.vertices;
    for (const auto& t : kTriangles) {
      out << "f " << base + static_cast<std::uint64_t>(t[0]) << ' ' << base + static_cast<std::uint64_t>(t[1]) << ' '
          << base + static_cast<std::uint64_t>(t[2]) << '\n';
    }
    stats.vertices += 8;
    stats.faces += 12;
  }
  return stats;
}

}  // namespace holey
