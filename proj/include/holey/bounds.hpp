#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "holey/builder.hpp"
#include "holey/enumerate.hpp"

namespace holey {

namespace detail {

// 2dh <= 2dn - 2(n-1) - 2d(n+h)^((d-1)/d), decided exactly. With N = (d-1)n + 1 - dh the
// condition reads d(n+h)^((d-1)/d) <= N, i.e. N >= 0 and d^d (n+h)^(d-1) <= N^d.
inline bool upper_bound_admits(std::size_t d, std::uint64_t n, std::uint64_t h) {
  using boost::multiprecision::cpp_int;
  const cpp_int dd = d;
  const cpp_int big_n = (dd - 1) * n + 1 - dd * h;
  if (big_n < 0) return false;
  return boost::multiprecision::pow(dd, static_cast<unsigned>(d)) *
             boost::multiprecision::pow(cpp_int(n + h), static_cast<unsigned>(d - 1)) <=
         boost::multiprecision::pow(big_n, static_cast<unsigned>(d));
}

}  // namespace detail

// Largest h in [0, (d-1)n] allowed by the face-count inequality with b >= n-1 and
// p_o >= 2d(n+h)^((d-1)/d).
inline std::uint64_t upper_bound(std::size_t d, std::uint64_t n) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (n < 1) throw std::invalid_argument("tile count must be at least 1");
  // Admissible h form a prefix of [0, (d-1)n]: the left side grows and the right side shrinks in h.
  std::uint64_t lo = 0;
  std::uint64_t hi = (d - 1) * n + 1;
  if (!detail::upper_bound_admits(d, n, 0)) return 0;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (detail::upper_bound_admits(d, n, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// The simplified closed form (d-1)/d * n - n^((d-1)/d). It omits the +1/d coming from
// b >= n-1 and is not a valid bound for small n, e.g. f_2(7) = 1 exceeds it.
inline double simplified_upper_bound(std::size_t d, std::uint64_t n) {
  const double dd = static_cast<double>(d);
  const double nn = static_cast<double>(n);
  return (dd - 1.0) / dd * nn - std::pow(nn, (dd - 1.0) / dd);
}

// Certified constructive lower bound: the hole count of an explicit n-omino.
inline std::uint64_t lower_bound(std::size_t d, std::uint64_t n, std::uint64_t budget = kDefaultCellBudget) {
  return build_for_n(d, n, budget).report.census.holes;
}

// Without outer perimeter, 2dh <= 2dn - 2(n-1).
inline std::uint64_t toric_upper_bound(std::size_t d, std::uint64_t n) {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  if (n < 1) throw std::invalid_argument("tile count must be at least 1");
  return ((d - 1) * n + 1) / d;
}

struct BoundReport {
  std::size_t d = 0;
  std::uint64_t n = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> exact;
  double simplified_upper = 0.0;

  bool sandwich_holds() const { return lower <= upper && (!exact || (lower <= *exact && *exact <= upper)); }
  // Only meaningful with an exact value.
  bool simplified_violated() const { return exact && static_cast<double>(*exact) > simplified_upper; }
};

struct BoundOptions {
  bool exact = false;
  unsigned jobs = 1;
  std::optional<std::uint64_t> enumeration_limit;
  std::uint64_t budget = kDefaultCellBudget;
};

inline BoundReport bound_report(std::size_t d, std::uint64_t n, const BoundOptions& opts = {}) {
  BoundReport r;
  r.d = d;
  r.n = n;
  r.upper = upper_bound(d, n);
  r.lower = lower_bound(d, n, opts.budget);
  r.simplified_upper = simplified_upper_bound(d, n);
  if (opts.exact) r.exact = brute_force_max_holes(d, n, opts.jobs, opts.enumeration_limit).max_holes;
  return r;
}

}  // namespace holey
