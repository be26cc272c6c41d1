#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "holey/cell.hpp"
#include "holey/lattice.hpp"
#include "holey/pattern.hpp"

namespace holey {

// Coset representatives of Z^d / L, ordered by IntegerLattice::rep_index.
inline std::vector<Cell> fundamental_domain(const IntegerLattice& lattice, std::uint64_t budget = kDefaultCellBudget) {
  check_budget(static_cast<std::uint64_t>(lattice.det()), budget, "fundamental_domain");
  std::vector<Cell> reps;
  reps.reserve(static_cast<std::size_t>(lattice.det()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(lattice.det()); ++i) reps.push_back(lattice.rep_at(i));
  return reps;
}

// Lambda_0: points over the lifted (d-1)-dimensional code whose coordinate sum is even.
inline IntegerLattice lambda0(std::size_t d) {
  check_pattern_dim(d);
  const std::int64_t q = pattern_modulus(d);
  // Basis of (lifted code) x Z: q e_1, e_i - i e_1 for 2 <= i <= d-1, e_d.
  IntMatrix rows;
  std::vector<std::int64_t> first(d, 0);
  first[0] = q;
  rows.push_back(first);
  for (std::size_t i = 2; i <= d - 1; ++i) {
    std::vector<std::int64_t> r(d, 0);
    r[i - 1] = 1;
    r[0] = -static_cast<std::int64_t>(i);
    rows.push_back(r);
  }
  // Index-2 even sublattice: shift odd rows by the odd vector e_d, and add 2 e_d.
  for (auto& r : rows) {
    if (floor_mod(std::accumulate(r.begin(), r.end(), std::int64_t{0}), 2) != 0) r[d - 1] += 1;
  }
  std::vector<std::int64_t> last(d, 0);
  last[d - 1] = 2;
  rows.push_back(last);
  return IntegerLattice(std::move(rows));
}

// Cells of the quotient torus Z^d / L, indexed by IntegerLattice::rep_index.
class TorusPolyomino {
 public:
  TorusPolyomino(IntegerLattice lattice, std::vector<std::uint8_t> occupied)
      : lattice_(std::move(lattice)), occupied_(std::move(occupied)) {
    if (occupied_.size() != static_cast<std::size_t>(lattice_.det())) {
      throw std::invalid_argument("occupancy size must equal the lattice determinant");
    }
  }

  std::size_t dim() const { return lattice_.dim(); }
  const IntegerLattice& lattice() const { return lattice_; }
  std::size_t cell_count() const { return occupied_.size(); }
  bool occupied(std::size_t idx) const { return occupied_[idx] != 0; }

  std::uint64_t tiles() const {
    return static_cast<std::uint64_t>(std::count(occupied_.begin(), occupied_.end(), std::uint8_t{1}));
  }

  std::size_t neighbor(std::size_t idx, std::size_t axis, std::int64_t step) const {
    Cell c = lattice_.rep_at(idx);
    c[axis] += step;
    return lattice_.rep_index(lattice_.reduce(c));
  }

  std::vector<Cell> occupied_cells() const {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < occupied_.size(); ++i) {
      if (occupied_[i]) out.push_back(lattice_.rep_at(i));
    }
    return out;
  }

 private:
  IntegerLattice lattice_;
  std::vector<std::uint8_t> occupied_;
};

// The projection of K_d to Z^d / L. L must be a sublattice of Lambda_0.
inline TorusPolyomino pattern_torus(const IntegerLattice& lattice, std::uint64_t budget = kDefaultCellBudget) {
  const std::size_t d = lattice.dim();
  if (!is_sublattice(lattice, lambda0(d))) {
    throw std::invalid_argument("lattice is not a sublattice of Lambda_0; K_d does not descend to the torus");
  }
  const auto reps = fundamental_domain(lattice, budget);
  std::vector<std::uint8_t> occupied(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) occupied[i] = kd_contains(d, reps[i]) ? 1 : 0;
  return TorusPolyomino(lattice, std::move(occupied));
}

struct ToricCensus {
  std::uint64_t n = 0;
  std::uint64_t holes = 0;  // complement components under quotient face adjacency
  std::uint64_t b = 0;
  std::uint64_t p_h = 0;
  bool connected = false;

  bool identity_holds(std::size_t d) const { return 2 * d * n == 2 * b + p_h; }
};

inline ToricCensus toric_census(const TorusPolyomino& t) {
  const std::size_t d = t.dim();
  const std::size_t total = t.cell_count();
  std::vector<std::size_t> nb(total * 2 * d);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      nb[i * 2 * d + 2 * a] = t.neighbor(i, a, 1);
      nb[i * 2 * d + 2 * a + 1] = t.neighbor(i, a, -1);
    }
  }

  ToricCensus census;
  std::uint64_t shared = 0;
  for (std::size_t i = 0; i < total; ++i) {
    if (!t.occupied(i)) continue;
    ++census.n;
    for (std::size_t k = 0; k < 2 * d; ++k) {
      if (t.occupied(nb[i * 2 * d + k])) {
        ++shared;
      } else {
        ++census.p_h;
      }
    }
  }
  census.b = shared / 2;

  std::vector<std::uint8_t> seen(total, 0);
  std::vector<std::size_t> stack;
  auto flood = [&](std::size_t seed, bool filled) {
    seen[seed] = 1;
    stack.push_back(seed);
    std::uint64_t reached = 1;
    while (!stack.empty()) {
      const std::size_t at = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < 2 * d; ++k) {
        const std::size_t next = nb[at * 2 * d + k];
        if (!seen[next] && t.occupied(next) == filled) {
          seen[next] = 1;
          ++reached;
          stack.push_back(next);
        }
      }
    }
    return reached;
  };

  for (std::size_t i = 0; i < total; ++i) {
    if (t.occupied(i) && !seen[i]) {
      census.connected = census.n > 0 && flood(i, true) == census.n;
      break;
    }
  }
  for (std::size_t i = 0; i < total; ++i) {
    if (!t.occupied(i) && !seen[i]) {
      flood(i, false);
      ++census.holes;
    }
  }
  return census;
}

struct OptimalTorusReport {
  std::int64_t det = 0;
  std::uint64_t tiles = 0;
  std::uint64_t holes = 0;
  bool connected = false;
};

struct OptimalTorus {
  TorusPolyomino torus;
  OptimalTorusReport report;
};

// Throws std::invalid_argument naming the first violated condition.
inline void check_optimal_torus_params(std::size_t d, std::span<const std::int64_t> n_list, std::int64_t c) {
  check_pattern_dim(d);
  if (n_list.size() != d - 1) {
    throw std::invalid_argument("need d-1 = " + std::to_string(d - 1) + " values n_i, got " + std::to_string(n_list.size()));
  }
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] <= 0) throw std::invalid_argument("n_" + std::to_string(i + 1) + " must be positive");
  }
  if (c <= 0) throw std::invalid_argument("c must be positive");
  if (n_list[0] % 2 != 0) throw std::invalid_argument("n_1 must be even");
  if (c % 2 == 0) throw std::invalid_argument("c must be odd");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    for (std::size_t j = i + 1; j < n_list.size(); ++j) {
      if (std::gcd(n_list[i], n_list[j]) != 1) {
        throw std::invalid_argument("n_" + std::to_string(i + 1) + " and n_" + std::to_string(j + 1) +
                                    " are not coprime");
      }
    }
  }
}

// Generators n_i u_i (1 <= i <= d-1) and c e_d - sum u_i, where u_1 = q e_1 and for
// 2 <= i <= d-1, u_i = e_i - i e_1 (i odd) or e_i + (q - i) e_1 (i even); q = 2d-1.
inline IntegerLattice optimal_torus_lattice(std::size_t d, std::span<const std::int64_t> n_list, std::int64_t c) {
  check_optimal_torus_params(d, n_list, c);
  const std::int64_t q = pattern_modulus(d);
  IntMatrix u(d - 1, std::vector<std::int64_t>(d, 0));
  u[0][0] = q;
  for (std::size_t i = 2; i <= d - 1; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    u[i - 1][i - 1] = 1;
    u[i - 1][0] = (i % 2 == 1) ? -ii : q - ii;
  }
  IntMatrix rows;
  std::vector<std::int64_t> last(d, 0);
  last[d - 1] = c;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    std::vector<std::int64_t> r(d);
    for (std::size_t k = 0; k < d; ++k) {
      r[k] = n_list[i] * u[i][k];
      last[k] -= u[i][k];
    }
    rows.push_back(std::move(r));
  }
  rows.push_back(std::move(last));
  return IntegerLattice(std::move(rows));
}

inline OptimalTorus build_optimal_torus(std::size_t d, std::span<const std::int64_t> n_list, std::int64_t c,
                                        std::uint64_t budget = kDefaultCellBudget) {
  TorusPolyomino t = pattern_torus(optimal_torus_lattice(d, n_list, c), budget);
  const ToricCensus census = toric_census(t);
  OptimalTorusReport report{t.lattice().det(), census.n, census.holes, census.connected};
  return OptimalTorus{std::move(t), report};
}

struct Systole {
  std::int64_t squared = 0;
  double length = 0.0;
  Cell vector;
};

namespace detail {

inline std::int64_t norm2(std::span<const std::int64_t> v) {
  std::int64_t s = 0;
  for (auto x : v) s += x * x;
  return s;
}

inline std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace detail

// Shortest nonzero lattice vector. The starting radius is the shortest generator (input or
// HNF row); every lattice point of that ball is visited by walking the triangular HNF
// coordinates from the last axis down, so membership is exact integer arithmetic.
inline Systole systole(const IntegerLattice& lattice, std::uint64_t budget = kDefaultCellBudget) {
  const std::size_t d = lattice.dim();
  const IntMatrix& h = lattice.hnf();
  Systole best;
  best.squared = -1;
  auto consider = [&](std::span<const std::int64_t> v) {
    const std::int64_t n2 = detail::norm2(v);
    if (n2 > 0 && (best.squared < 0 || n2 < best.squared)) {
      best.squared = n2;
      best.vector = Cell(v);
    }
  };
  for (const auto& r : lattice.generators()) consider(r);
  for (const auto& r : h) consider(r);

  std::vector<std::int64_t> coeff(d, 0);
  std::vector<std::int64_t> x(d, 0);
  std::uint64_t visited = 0;
  // partial: sum of squares of x[k+1..d-1]
  auto descend = [&](auto& self, std::size_t k, std::int64_t partial) -> void {
    if (++visited > budget) throw CapacityError("systole search exceeds the cell budget");
    std::int64_t shift = 0;
    for (std::size_t j = k + 1; j < d; ++j) shift += coeff[j] * h[j][k];
    const std::int64_t room = detail::isqrt(best.squared - partial);
    const std::int64_t hk = h[k][k];
    const std::int64_t lo = -floor_div(room + shift, hk);  // ceil((-room - shift) / hk)
    const std::int64_t hi = floor_div(room - shift, hk);
    for (std::int64_t ck = lo; ck <= hi; ++ck) {
      coeff[k] = ck;
      x[k] = ck * hk + shift;
      const std::int64_t p = partial + x[k] * x[k];
      if (p > best.squared) continue;
      if (k == 0) {
        consider(x);
      } else {
        self(self, k - 1, p);
      }
    }
    coeff[k] = 0;
  };
  descend(descend, d - 1, 0);
  best.length = std::sqrt(static_cast<double>(best.squared));
  return best;
}

// Checks kd_contains(x) == kd_contains(x + g) for every generator g over random cells, every
// coset representative (when det <= exhaustive_limit), and one full period box of K_d.
inline bool verify_invariance(std::size_t d, const IntegerLattice& lattice, std::uint64_t samples,
                              std::uint64_t seed = 1, std::uint64_t exhaustive_limit = 10'000) {
  check_pattern_dim(d);
  if (lattice.dim() != d) throw std::invalid_argument("lattice dimension does not match pattern dimension");
  std::vector<Cell> gens;
  for (std::size_t i = 0; i < lattice.generators().size(); ++i) gens.push_back(lattice.generator(i));
  auto stable = [&](const Cell& x) {
    const bool in = kd_contains(d, x);
    for (const auto& g : gens) {
      if (kd_contains(d, x + g) != in) return false;
    }
    return true;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Cell x(d);
    for (std::size_t k = 0; k < d; ++k) x[k] = coord(rng);
    if (!stable(x)) return false;
  }
  if (static_cast<std::uint64_t>(lattice.det()) <= exhaustive_limit) {
    for (const auto& x : fundamental_domain(lattice)) {
      if (!stable(x)) return false;
    }
  }
  // K_d has period 2q along the first d-1 axes and 2 along the last.
  Cell x(d);
  const std::int64_t period = 2 * pattern_modulus(d);
  while (true) {
    if (!stable(x)) return false;
    std::size_t k = d;
    while (k-- > 0) {
      if (++x[k] < (k == d - 1 ? 2 : period)) break;
      x[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return true;
}

struct FatTorus {
  std::vector<std::int64_t> n_list;
  std::int64_t c = 0;
  std::int64_t det = 0;
  std::int64_t systole_squared = 0;
  double systole = 0.0;
  double normalized = 0.0;  // systole / det^(1/d)
};

// Scans n_i in [1, max_param] (n_1 even, pairwise coprime) and odd c in [1, max_param],
// ranked by normalized systole, descending. Exploratory; no optimality is implied.
inline std::vector<FatTorus> search_fat_tori(std::size_t d, std::int64_t max_param,
                                             std::uint64_t budget = kDefaultCellBudget) {
  check_pattern_dim(d);
  std::vector<FatTorus> out;
  std::vector<std::int64_t> n_list(d - 1, 1);
  auto visit = [&] {
    for (std::int64_t c = 1; c <= max_param; c += 2) {
      try {
        check_optimal_torus_params(d, n_list, c);
      } catch (const std::invalid_argument&) {
        return;
      }
      const IntegerLattice lat = optimal_torus_lattice(d, n_list, c);
      const Systole s = systole(lat, budget);
      FatTorus f{n_list, c, lat.det(), s.squared, s.length, 0.0};
      f.normalized = s.length / std::pow(static_cast<double>(lat.det()), 1.0 / static_cast<double>(d));
      out.push_back(std::move(f));
    }
  };
  // Odometer over n_list, n_1 stepping through even values.
  n_list[0] = 2;
  if (max_param < 2) return out;
  while (true) {
    visit();
    std::size_t k = 0;
    for (; k < n_list.size(); ++k) {
      const std::int64_t step = k == 0 ? 2 : 1;
      if (n_list[k] + step <= max_param) {
        n_list[k] += step;
        break;
      }
      n_list[k] = k == 0 ? 2 : 1;
    }
    if (k == n_list.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const FatTorus& a, const FatTorus& b) {
    if (a.normalized != b.normalized) return a.normalized > b.normalized;
    if (a.det != b.det) return a.det < b.det;
    if (a.n_list != b.n_list) return a.n_list < b.n_list;
    return a.c < b.c;
  });
  return out;
}

}  // namespace holey
