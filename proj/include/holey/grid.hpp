#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "holey/cell.hpp"

namespace holey {

// Dense row-major indexing of a box of cells. The last axis is contiguous.
class GridIndex {
 public:
  GridIndex(const BoundingBox& box, std::int64_t pad, std::uint64_t budget = kDefaultCellBudget)
      : dim_(box.lo.dim()), origin_(box.lo), extent_(dim_), stride_(dim_) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      origin_[i] -= pad;
      extent_[i] = box.hi[i] - box.lo[i] + 1 + 2 * pad;
      total *= static_cast<std::uint64_t>(extent_[i]);
      if (total > budget) check_budget(total, budget, "grid");
    }
    std::int64_t s = 1;
    for (std::size_t i = dim_; i-- > 0;) {
      stride_[i] = s;
      s *= extent_[i];
    }
    size_ = static_cast<std::size_t>(total);
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return size_; }
  std::int64_t extent(std::size_t axis) const { return extent_[axis]; }
  std::int64_t stride(std::size_t axis) const { return stride_[axis]; }
  const Cell& origin() const { return origin_; }

  bool in_range(const Cell& c) const {
    for (std::size_t i = 0; i < dim_; ++i) {
      const std::int64_t r = c[i] - origin_[i];
      if (r < 0 || r >= extent_[i]) return false;
    }
    return true;
  }

  std::size_t index(const Cell& c) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < dim_; ++i) idx += (c[i] - origin_[i]) * stride_[i];
    return static_cast<std::size_t>(idx);
  }

  Cell cell_at(std::size_t idx) const {
    Cell c(dim_);
    auto rest = static_cast<std::int64_t>(idx);
    for (std::size_t i = 0; i < dim_; ++i) {
      c[i] = origin_[i] + rest / stride_[i];
      rest %= stride_[i];
    }
    return c;
  }

  // True for cells within `layers` of the grid's outer boundary.
  bool near_boundary(std::size_t idx, std::int64_t layers) const {
    auto rest = static_cast<std::int64_t>(idx);
    for (std::size_t i = 0; i < dim_; ++i) {
      const std::int64_t r = rest / stride_[i];
      rest %= stride_[i];
      if (r < layers || r >= extent_[i] - layers) return true;
    }
    return false;
  }

  // Index offsets of the 2d face neighbors: +e_0, -e_0, +e_1, ...
  std::vector<std::int64_t> face_offsets() const {
    std::vector<std::int64_t> off;
    off.reserve(2 * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      off.push_back(stride_[i]);
      off.push_back(-stride_[i]);
    }
    return off;
  }

  // Index offsets of the 3^d - 1 neighbors at L-infinity distance one.
  std::vector<std::int64_t> king_offsets() const {
    std::vector<std::int64_t> off{0};
    for (std::size_t i = 0; i < dim_; ++i) {
      std::vector<std::int64_t> next;
      next.reserve(off.size() * 3);
      for (auto o : off) {
        for (std::int64_t s : {-1, 0, 1}) next.push_back(o + s * stride_[i]);
      }
      off = std::move(next);
    }
    std::erase(off, 0);
    return off;
  }

 private:
  std::size_t dim_;
  Cell origin_;
  std::vector<std::int64_t> extent_;
  std::vector<std::int64_t> stride_;
  std::size_t size_ = 0;
};

}  // namespace holey
