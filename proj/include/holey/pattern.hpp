#pragma once

#include <cstdint>
#include <stdexcept>

#include "holey/cell.hpp"
#include "holey/lee_code.hpp"

namespace holey {

// The infinite pattern K_d: every even cell, plus every full column (along the last axis)
// standing on a word of the lifted (d-1)-dimensional Lee code, whose modulus is q = 2d-1.
inline std::int64_t pattern_modulus(std::size_t d) { return 2 * static_cast<std::int64_t>(d) - 1; }

inline void check_pattern_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("pattern dimension must be at least 2");
  if (d > kMaxDim) throw std::invalid_argument("pattern dimension exceeds kMaxDim");
}

// True when the column through x (fixing all but the last coordinate) is entirely in K_d.
inline bool is_column_cell(std::size_t d, const Cell& x) { return lift_contains(d - 1, x.coords()); }

inline bool kd_contains(std::size_t d, const Cell& x) {
  check_pattern_dim(d);
  if (x.dim() != d) throw std::invalid_argument("cell arity does not match pattern dimension");
  if (floor_mod(x.coordinate_sum(), 2) == 0) return true;
  return is_column_cell(d, x);
}

// Number of K_d cells in the q x 1 x ... x 1 x 2 box whose minimal corner is `anchor`.
inline std::uint64_t box_census(std::size_t d, const Cell& anchor) {
  check_pattern_dim(d);
  const std::int64_t q = pattern_modulus(d);
  std::uint64_t count = 0;
  for (std::int64_t a = 0; a < q; ++a) {
    for (std::int64_t b = 0; b < 2; ++b) {
      Cell x = anchor;
      x[0] += a;
      x[d - 1] += b;
      if (kd_contains(d, x)) ++count;
    }
  }
  return count;
}

}  // namespace holey
