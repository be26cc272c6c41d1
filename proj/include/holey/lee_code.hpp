#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "holey/cell.hpp"

namespace holey {

// Perfect 1-error-correcting code in the Lee metric on (Z/qZ)^d with q = 2d+1:
// the words a with sum_i i*a_i == 0 (mod q).
struct LeeCode {
  std::size_t dim = 0;
  std::int64_t modulus = 0;
  std::vector<Cell> words;  // coordinates in [0, modulus)
};

inline constexpr std::uint64_t kDefaultCodeBudget = 200'000;

inline std::int64_t lee_modulus(std::size_t d) { return 2 * static_cast<std::int64_t>(d) + 1; }

inline std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Weighted sum sum_i (i+1)*x_i reduced to [0, q). Only the first `d` coordinates count.
inline std::int64_t lee_syndrome(std::span<const std::int64_t> x, std::size_t d, std::int64_t q) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < d; ++i) s = floor_mod(s + static_cast<std::int64_t>(i + 1) * floor_mod(x[i], q), q);
  return s;
}

inline bool is_code_word(std::size_t d, const Cell& p) {
  if (d == 0) throw std::invalid_argument("Lee code dimension must be at least 1");
  if (p.dim() != d) throw std::invalid_argument("point arity does not match code dimension");
  return lee_syndrome(p.coords(), d, lee_modulus(d)) == 0;
}

// Membership in the periodic lift of the code to Z^d.
inline bool lift_contains(std::size_t d, std::span<const std::int64_t> x) {
  if (d == 0) throw std::invalid_argument("Lee code dimension must be at least 1");
  if (x.size() < d) throw std::invalid_argument("point has fewer than d coordinates");
  return lee_syndrome(x, d, lee_modulus(d)) == 0;
}

inline bool lift_contains(std::size_t d, const Cell& x) { return lift_contains(d, x.coords()); }

// Words are listed by increasing (a_2, ..., a_d), a_2 least significant; a_1 is solved for.
inline LeeCode code_words(std::size_t d, std::uint64_t budget = kDefaultCodeBudget) {
  if (d == 0) throw std::invalid_argument("Lee code dimension must be at least 1");
  if (d > kMaxDim) throw std::invalid_argument("Lee code dimension exceeds kMaxDim");
  const std::int64_t q = lee_modulus(d);
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(q), d - 1);
  check_budget(count, budget, "code_words");

  LeeCode code{d, q, {}};
  code.words.reserve(count);
  Cell w(d);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t rest = k;
    std::int64_t s = 0;
    for (std::size_t i = 1; i < d; ++i) {
      w[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
      s = (s + static_cast<std::int64_t>(i + 1) * w[i]) % q;
    }
    w[0] = floor_mod(-s, q);
    code.words.push_back(w);
  }
  return code;
}

struct PerfectCodeReport {
  bool covered_once = false;
  std::uint64_t jack_count = 0;
  std::uint64_t cell_count = 0;
};

// Exhaustively checks that the jacks centered at code words tile (Z/qZ)^d.
inline PerfectCodeReport verify_perfect(std::size_t d, std::uint64_t budget = kDefaultCodeBudget) {
  if (d == 0) throw std::invalid_argument("Lee code dimension must be at least 1");
  const std::int64_t q = lee_modulus(d);
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(q), d);
  check_budget(total, budget, "verify_perfect");

  const LeeCode code = code_words(d, budget);
  std::vector<std::uint64_t> stride(d);
  for (std::size_t i = 0; i < d; ++i) stride[i] = ipow(static_cast<std::uint64_t>(q), i);
  auto index_of = [&](const Cell& p) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < d; ++i) idx += static_cast<std::uint64_t>(floor_mod(p[i], q)) * stride[i];
    return idx;
  };

  std::vector<std::uint32_t> hits(total, 0);
  for (const auto& w : code.words) {
    ++hits[index_of(w)];
    for (std::size_t i = 0; i < d; ++i) {
      for (std::int64_t step : {-1, 1}) {
        Cell p = w;
        p[i] += step;
        ++hits[index_of(p)];
      }
    }
  }

  PerfectCodeReport report;
  report.jack_count = code.words.size();
  report.cell_count = total;
  report.covered_once = std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h == 1; });
  return report;
}

}  // namespace holey
