#include <gtest/gtest.h>

#include <sstream>

#include "holey/builder.hpp"
#include "holey/cell_io.hpp"
#include "holey/obj.hpp"

namespace holey {
namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_cells(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(CellIo, ParsesCommentsAndBlankLines) {
  const auto s = parse_cells("# three cells\nd 2\n\n1 0   # right\n0 0\n-3 7\n");
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(Cell{-3, 7}));
}

TEST(CellIo, RoundTripIsSortedAndStable) {
  const auto s = parse_cells("d 3\n2 0 0\n0 0 1\n0 0 0\n");
  const std::string text = format_cells(s);
  EXPECT_EQ(text, "d 3\n0 0 0\n0 0 1\n2 0 0\n");
  EXPECT_EQ(parse_cells(text), s);
  const auto p = build_cube_polyomino(2, 1).polyomino;
  EXPECT_EQ(parse_cells(format_cells(p)), p);
}

TEST(CellIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("d 2\n0 0\n1\n"), 3u);
  EXPECT_EQ(error_line("d 2\n0 0\n\n0 0\n"), 4u);
  EXPECT_EQ(error_line("0 0\n"), 1u);
  EXPECT_EQ(error_line("d 2\n0 x\n"), 2u);
  EXPECT_EQ(error_line("d 0\n"), 1u);
  EXPECT_EQ(error_line("# nothing\n"), 1u);
  try {
    parse_cells("d 2\n0 0\n1 1\n0 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("first seen on line 2"), std::string::npos);
  }
}

TEST(Obj, SingleCube) {
  std::ostringstream out;
  const auto stats = write_obj(out, CellSet(3, {Cell{0, 0, 0}}));
  EXPECT_EQ(stats.vertices, 8u);
  EXPECT_EQ(stats.faces, 12u);
  EXPECT_THROW(write_obj(out, CellSet(2, {Cell{0, 0}})), std::invalid_argument);
}

TEST(Obj, TrianglesFaceOutward) {
  std::ostringstream out;
  write_obj(out, CellSet(3, {Cell{0, 0, 0}}));
  std::istringstream in(out.str());
  std::vector<std::array<double, 3>> v;
  std::string tag;
  int checked = 0;
  for (std::string line; std::getline(in, line);) {
    std::istringstream f(line);
    f >> tag;
    if (tag == "v") {
      std::array<double, 3> p{};
      f >> p[0] >> p[1] >> p[2];
      v.push_back(p);
    } else if (tag == "f") {
      std::size_t a, b, c;
      f >> a >> b >> c;
      const auto &p = v[a - 1], &q = v[b - 1], &r = v[c - 1];
      std::array<double, 3> u{q[0] - p[0], q[1] - p[1], q[2] - p[2]};
      std::array<double, 3> w{r[0] - p[0], r[1] - p[1], r[2] - p[2]};
      std::array<double, 3> n{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
      std::array<double, 3> centroid{(p[0] + q[0] + r[0]) / 3, (p[1] + q[1] + r[1]) / 3, (p[2] + q[2] + r[2]) / 3};
      EXPECT_GT(n[0] * centroid[0] + n[1] * centroid[1] + n[2] * centroid[2], 0.0);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 12);
}

TEST(Obj, CubePolyomino) {
  std::ostringstream out;
  const auto stats = write_obj(out, build_cube_polyomino(3, 1).polyomino);
  EXPECT_EQ(stats.vertices, 8u * 1328u);
  EXPECT_EQ(stats.faces, 12u * 1328u);
}

}  // namespace
}  // namespace holey
