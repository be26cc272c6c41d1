#include <gtest/gtest.h>

#include <random>

#include "holey/enumerate.hpp"
#include "holey/polyomino.hpp"
#include "oracles.hpp"

namespace holey {
namespace {

CellSet ring8() {
  return CellSet(2, {Cell{0, 0}, Cell{0, 1}, Cell{0, 2}, Cell{1, 0}, Cell{1, 2}, Cell{2, 0}, Cell{2, 1}, Cell{2, 2}});
}

CellSet ring7() {
  return CellSet(2, {Cell{0, 0}, Cell{0, 1}, Cell{0, 2}, Cell{1, 0}, Cell{1, 2}, Cell{2, 0}, Cell{2, 1}});
}

TEST(CellSet, RejectsDuplicatesAndWrongArity) {
  EXPECT_THROW(CellSet(2, {Cell{0, 0}, Cell{0, 0}}), std::invalid_argument);
  EXPECT_THROW(CellSet(2, {Cell{0, 0, 0}}), std::invalid_argument);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_rook_connected(CellSet(2, {Cell{5, 5}})));
  EXPECT_FALSE(is_rook_connected(CellSet(2, {Cell{0, 0}, Cell{2, 0}})));
  EXPECT_FALSE(is_rook_connected(CellSet(2, {Cell{0, 0}, Cell{1, 1}})));  // diagonal only
  EXPECT_TRUE(is_rook_connected(ring8()));
  EXPECT_FALSE(is_rook_connected(CellSet(2)));
}

TEST(Holes, Examples) {
  EXPECT_EQ(holes(CellSet(2, {Cell{0, 0}})).count, 0u);
  EXPECT_EQ(holes(ring8()).count, 1u);
  ASSERT_EQ(oracle::holes_union_find(ring7()), 1u);
  EXPECT_EQ(holes(ring7()).count, 1u);
  EXPECT_EQ(holes(CellSet(2)).count, 0u);

  const auto report = holes(ring8(), true);
  ASSERT_EQ(report.components.size(), 1u);
  ASSERT_EQ(report.components[0].size(), 1u);
  EXPECT_EQ(report.components[0][0], (Cell{1, 1}));
}

TEST(Holes, DiagonalGapDoesNotLeak) {
  // 3D shell of a 3x3x3 cube with one corner removed still encloses the center.
  std::vector<Cell> cells;
  for (std::int64_t x = 0; x < 3; ++x)
    for (std::int64_t y = 0; y < 3; ++y)
      for (std::int64_t z = 0; z < 3; ++z)
        if (!(x == 1 && y == 1 && z == 1) && !(x == 2 && y == 2 && z == 2)) cells.push_back(Cell{x, y, z});
  const CellSet s(3, cells);
  EXPECT_EQ(holes(s).count, 1u);
  EXPECT_EQ(oracle::holes_union_find(s), 1u);
}

TEST(FaceCensus, Examples) {
  const auto single = face_census(CellSet(2, {Cell{0, 0}}));
  EXPECT_EQ(single.b, 0u);
  EXPECT_EQ(single.p_h, 0u);
  EXPECT_EQ(single.p_o, 4u);

  const auto domino = face_census(CellSet(2, {Cell{0, 0}, Cell{0, 1}}));
  EXPECT_EQ(domino.b, 1u);
  EXPECT_EQ(domino.p_h, 0u);
  EXPECT_EQ(domino.p_o, 6u);

  const auto ring = face_census(ring8());
  const auto naive = oracle::census_by_sets(ring8());
  ASSERT_EQ(naive.b, 8u);
  ASSERT_EQ(naive.p_h, 4u);
  ASSERT_EQ(naive.p_o, 12u);
  EXPECT_EQ(ring.b, 8u);
  EXPECT_EQ(ring.p_h, 4u);
  EXPECT_EQ(ring.p_o, 12u);
  EXPECT_EQ(ring.holes, 1u);
  EXPECT_TRUE(ring.identity_holds());

  const auto empty = face_census(CellSet(2));
  EXPECT_EQ(empty, FaceCensus{.dim = 2});
}

CellSet random_blob(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  std::set<Cell> cells{Cell(d)};
  std::vector<Cell> order{Cell(d)};
  std::uniform_int_distribution<std::size_t> axis(0, d - 1);
  std::bernoulli_distribution sign(0.5);
  while (cells.size() < n) {
    std::uniform_int_distribution<std::size_t> pick(0, order.size() - 1);
    Cell c = order[pick(rng)];
    c[axis(rng)] += sign(rng) ? 1 : -1;
    if (cells.insert(c).second) order.push_back(c);
  }
  return CellSet(d, order);
}

CellSet random_sparse(std::mt19937_64& rng, std::size_t d, std::int64_t side, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Cell> cells;
  Cell x(d);
  while (true) {
    if (keep(rng)) cells.push_back(x);
    std::size_t k = d;
    while (k-- > 0) {
      if (++x[k] < side) break;
      x[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  if (cells.empty()) cells.push_back(Cell(d));
  return CellSet(d, cells);
}

TEST(Holes, PropertiesOnRandomSets) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> shift(-50, 50);
  for (std::size_t d = 2; d <= 4; ++d) {
    for (int t = 0; t < 60; ++t) {
      const CellSet s = (t % 2) ? random_blob(rng, d, 20 + static_cast<std::size_t>(t))
                                : random_sparse(rng, d, d == 2 ? 12 : 6, 0.55);
      const auto census = face_census(s);
      ASSERT_TRUE(census.identity_holds());
      EXPECT_GE(census.p_h, 2 * d * census.holes);
      EXPECT_EQ(census.holes, oracle::holes_union_find(s));
      const auto naive = oracle::census_by_sets(s);
      EXPECT_EQ(census.b, naive.b);
      EXPECT_EQ(census.p_h, naive.p_h);
      EXPECT_EQ(census.p_o, naive.p_o);
      const bool connected = is_rook_connected(s);
      EXPECT_EQ(connected, oracle::connected_by_sets(s));
      if (connected) {
        EXPECT_GE(census.b + 1, census.n);
      }

      Cell v(d);
      for (std::size_t k = 0; k < d; ++k) v[k] = shift(rng);
      EXPECT_EQ(holes(s.translated(v)).count, census.holes);
    }
  }
}

TEST(Holes, AgreesWithUnionFindOnAllSmallPolyominoes) {
  for (std::size_t n = 1; n <= 10; ++n) {
    std::uint64_t checked = 0;
    for_each_fixed_polyomino(2, n, [&](std::span<const Cell> cells) {
      const CellSet s(2, std::vector<Cell>(cells.begin(), cells.end()));
      ASSERT_EQ(holes(s).count, oracle::holes_union_find(s));
      ++checked;
    });
    EXPECT_GT(checked, 0u);
  }
}

}  // namespace
}  // namespace holey
