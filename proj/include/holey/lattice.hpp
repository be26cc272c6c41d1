#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "holey/cell.hpp"

namespace holey {

// Rows are vectors.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Determinant by fraction-free Gaussian elimination (Bareiss).
inline std::int64_t bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  }
  if (n == 0) return 1;
  __int128 sign = 1;
  __int128 prev = 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

// A full-rank sublattice of Z^d given by generators (at least d rows). The lower-triangular
// Hermite normal form H (positive diagonal, 0 <= H[i][j] < H[j][j] for j < i) generates the
// same lattice; the box prod [0, H[k][k]) is a set of coset representatives for Z^d / L.
class IntegerLattice {
 public:
  explicit IntegerLattice(IntMatrix generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("lattice needs at least one generator");
    dim_ = generators_.front().size();
    if (dim_ == 0 || dim_ > kMaxDim) throw std::invalid_argument("lattice dimension out of range");
    for (const auto& row : generators_) {
      if (row.size() != dim_) throw std::invalid_argument("generators have inconsistent lengths");
    }
    if (generators_.size() < dim_) throw std::invalid_argument("lattice is not full rank");
    hnf_ = hermite_normal_form(generators_, dim_);
    det_ = 1;
    for (std::size_t k = 0; k < dim_; ++k) det_ *= hnf_[k][k];
    if (generators_.size() == dim_) {
      const std::int64_t b = std::llabs(bareiss_determinant(generators_));
      if (b != det_) throw std::logic_error("HNF and Bareiss determinants disagree");
    }
  }

  static IntegerLattice diagonal(std::span<const std::int64_t> entries) {
    IntMatrix m(entries.size(), std::vector<std::int64_t>(entries.size(), 0));
    for (std::size_t i = 0; i < entries.size(); ++i) m[i][i] = entries[i];
    return IntegerLattice(std::move(m));
  }

  static IntegerLattice standard(std::size_t d) {
    std::vector<std::int64_t> ones(d, 1);
    return diagonal(ones);
  }

  std::size_t dim() const { return dim_; }
  const IntMatrix& generators() const { return generators_; }
  const IntMatrix& hnf() const { return hnf_; }
  std::int64_t det() const { return det_; }

  // The coset representative of x: back-substitution from the last coordinate down.
  Cell reduce(Cell x) const {
    check_arity(x);
    for (std::size_t k = dim_; k-- > 0;) {
      const std::int64_t t = floor_div(x[k], hnf_[k][k]);
      if (t == 0) continue;
      for (std::size_t j = 0; j <= k; ++j) x[j] -= t * hnf_[k][j];
    }
    return x;
  }

  bool contains(const Cell& x) const {
    const Cell r = reduce(x);
    for (std::size_t k = 0; k < dim_; ++k) {
      if (r[k] != 0) return false;
    }
    return true;
  }

  Cell generator(std::size_t i) const { return Cell(std::span<const std::int64_t>(generators_[i])); }

  IntegerLattice scaled(std::int64_t k) const {
    if (k == 0) throw std::invalid_argument("scaling by zero");
    IntMatrix m = generators_;
    for (auto& row : m)
      for (auto& x : row) x *= k;
    return IntegerLattice(std::move(m));
  }

  // Mixed-radix index of a reduced cell within the representative box.
  std::size_t rep_index(const Cell& reduced) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dim_; ++k) idx = idx * static_cast<std::size_t>(hnf_[k][k]) + static_cast<std::size_t>(reduced[k]);
    return idx;
  }

  Cell rep_at(std::size_t idx) const {
    Cell c(dim_);
    for (std::size_t k = dim_; k-- > 0;) {
      const auto radix = static_cast<std::size_t>(hnf_[k][k]);
      c[k] = static_cast<std::int64_t>(idx % radix);
      idx /= radix;
    }
    return c;
  }

 private:
  void check_arity(const Cell& x) const {
    if (x.dim() != dim_) throw std::invalid_argument("point arity does not match lattice dimension");
  }

  // Row-style HNF, lower triangular: column k is cleared bottom-up by Euclid steps among
  // the rows not yet used as pivots.
  static IntMatrix hermite_normal_form(IntMatrix rows, std::size_t d) {
    IntMatrix h(d, std::vector<std::int64_t>(d, 0));
    std::vector<bool> used(rows.size(), false);
    for (std::size_t k = d; k-- > 0;) {
      while (true) {
        std::size_t pivot = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (used[r] || rows[r][k] == 0) continue;
          if (pivot == rows.size() || std::llabs(rows[r][k]) < std::llabs(rows[pivot][k])) pivot = r;
        }
        if (pivot == rows.size()) throw std::invalid_argument("lattice is not full rank");
        bool cleared = true;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (used[r] || r == pivot || rows[r][k] == 0) continue;
          const std::int64_t t = floor_div(rows[r][k], rows[pivot][k]);
          for (std::size_t j = 0; j <= k; ++j) rows[r][j] -= t * rows[pivot][j];
          if (rows[r][k] != 0) cleared = false;
        }
        if (cleared) {
          if (rows[pivot][k] < 0) {
            for (auto& x : rows[pivot]) x = -x;
          }
          h[k] = rows[pivot];
          used[pivot] = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j-- > 0;) {
        const std::int64_t t = floor_div(h[i][j], h[j][j]);
        if (t == 0) continue;
        for (std::size_t c = 0; c <= j; ++c) h[i][c] -= t * h[j][c];
      }
    }
    return h;
  }

  std::size_t dim_ = 0;
  IntMatrix generators_;
  IntMatrix hnf_;
  std::int64_t det_ = 0;
};

// True iff every generator of `inner` lies in `outer`.
inline bool is_sublattice(const IntegerLattice& inner, const IntegerLattice& outer) {
  if (inner.dim() != outer.dim()) throw std::invalid_argument("lattices have different dimensions");
  for (std::size_t i = 0; i < inner.generators().size(); ++i) {
    if (!outer.contains(inner.generator(i))) return false;
  }
  return true;
}

// Parses "a b; c d" into rows.
inline IntMatrix parse_basis(const std::string& text) {
  IntMatrix rows;
  std::vector<std::int64_t> row;
  std::string token;
  auto flush_token = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad integer '" + token + "' in basis");
    row.push_back(v);
    token.clear();
  };
  for (char ch : text + ";") {
    if (ch == ';') {
      flush_token();
      if (!row.empty()) rows.push_back(std::move(row));
      row.clear();
    } else if (ch == ' ' || ch == '\t' || ch == ',') {
      flush_token();
    } else {
      token.push_back(ch);
    }
  }
  return rows;
}

}  // namespace holey
