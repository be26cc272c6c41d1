#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace holey {

// Largest ambient dimension a Cell can carry.
inline constexpr std::size_t kMaxDim = 8;

// Default cap on the number of grid cells any single operation may allocate.
inline constexpr std::uint64_t kDefaultCellBudget = std::uint64_t{1} << 26;

// Raised when an operation would exceed its configured size budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_budget(std::uint64_t needed, std::uint64_t budget, const char* what) {
  if (needed > budget) {
    throw CapacityError(std::string(what) + ": needs " + std::to_string(needed) +
                        " cells, budget is " + std::to_string(budget));
  }
}

// Floor division and non-negative remainder for signed integers.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

// An integer point of Z^d; labels the unit cube centered there.
class Cell {
 public:
  Cell() = default;

  explicit Cell(std::size_t dim) : dim_(checked_dim(dim)) {}

  Cell(std::initializer_list<std::int64_t> coords) : dim_(checked_dim(coords.size())) {
    std::copy(coords.begin(), coords.end(), coords_.begin());
  }

  explicit Cell(std::span<const std::int64_t> coords) : dim_(checked_dim(coords.size())) {
    std::copy(coords.begin(), coords.end(), coords_.begin());
  }

  std::size_t dim() const { return dim_; }

  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }

  std::span<const std::int64_t> coords() const { return {coords_.data(), dim_}; }
  std::span<std::int64_t> coords() { return {coords_.data(), dim_}; }

  std::int64_t coordinate_sum() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += coords_[i];
    return s;
  }

  Cell& operator+=(const Cell& o) {
    for (std::size_t i = 0; i < dim_; ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Cell& operator-=(const Cell& o) {
    for (std::size_t i = 0; i < dim_; ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend Cell operator+(Cell a, const Cell& b) { return a += b; }
  friend Cell operator-(Cell a, const Cell& b) { return a -= b; }

  // Unit vector along `axis`, scaled by `step`.
  static Cell unit(std::size_t dim, std::size_t axis, std::int64_t step = 1) {
    Cell c(dim);
    c[axis] = step;
    return c;
  }

  // Lexicographic order, coordinate 0 most significant. Unused slots are zero.
  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;

 private:
  static std::size_t checked_dim(std::size_t d) {
    if (d > kMaxDim) throw std::invalid_argument("dimension exceeds kMaxDim");
    return d;
  }

  std::array<std::int64_t, kMaxDim> coords_{};
  std::size_t dim_ = 0;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ c.dim();
    for (auto x : c.coords()) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Inclusive axis-aligned box [lo, hi].
struct BoundingBox {
  Cell lo;
  Cell hi;

  std::uint64_t volume() const {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < lo.dim(); ++i) v *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    return v;
  }
};

// A finite set of cells of one dimension, stored sorted and duplicate free.
class CellSet {
 public:
  explicit CellSet(std::size_t dim = 2) : dim_(dim) {}

  // Throws std::invalid_argument on a duplicate cell or a cell of the wrong arity.
  CellSet(std::size_t dim, std::vector<Cell> cells) : dim_(dim), cells_(std::move(cells)) {
    for (const auto& c : cells_) {
      if (c.dim() != dim_) throw std::invalid_argument("cell arity does not match set dimension");
    }
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
      throw std::invalid_argument("duplicate cell in CellSet");
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  std::span<const Cell> cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  bool contains(const Cell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

  // Undefined for an empty set.
  BoundingBox bounds() const {
    BoundingBox box{cells_.front(), cells_.front()};
    for (const auto& c : cells_) {
      for (std::size_t i = 0; i < dim_; ++i) {
        box.lo[i] = std::min(box.lo[i], c[i]);
        box.hi[i] = std::max(box.hi[i], c[i]);
      }
    }
    return box;
  }

  CellSet translated(const Cell& v) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_) out.push_back(c + v);
    CellSet s(dim_);
    s.cells_ = std::move(out);  // translation preserves order and uniqueness
    return s;
  }

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::size_t dim_;
  std::vector<Cell> cells_;
};

}  // namespace holey
