#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "holey/cell.hpp"

namespace holey {

// Cell file format:
//   d <dim>
//   <x_1> ... <x_d>      one cell per line
// '#' starts a comment; blank lines are ignored; duplicate cells are rejected.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline CellSet parse_cells(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  std::vector<Cell> cells;
  std::unordered_map<Cell, std::size_t, CellHash> first_seen;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    if (dim == 0) {
      if (tokens.size() != 2 || tokens[0] != "d") throw ParseError(line_no, "expected header 'd <dim>'");
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tokens[1], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[1].size() || v < 1 || v > static_cast<long long>(kMaxDim)) {
        throw ParseError(line_no, "invalid dimension '" + tokens[1] + "'");
      }
      dim = static_cast<std::size_t>(v);
      continue;
    }

    if (tokens.size() != dim) {
      throw ParseError(line_no, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(tokens.size()));
    }
    Cell c(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      std::size_t used = 0;
      try {
        c[k] = std::stoll(tokens[k], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[k].size()) throw ParseError(line_no, "invalid coordinate '" + tokens[k] + "'");
    }
    if (auto [it, fresh] = first_seen.emplace(c, line_no); !fresh) {
      throw ParseError(line_no, "duplicate cell (first seen on line " + std::to_string(it->second) + ")");
    }
    cells.push_back(c);
  }
  if (dim == 0) throw ParseError(line_no, "missing header 'd <dim>'");
  return CellSet(dim, std::move(cells));
}

inline CellSet parse_cells(const std::string& text) {
  std::istringstream in(text);
  return parse_cells(in);
}

inline CellSet read_cell_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_cells(in);
}

// Cells are written in lexicographic order.
inline void write_cells(std::ostream& out, const CellSet& s) {
  out << "d " << s.dim() << '\n';
  for (const auto& c : s) {
    for (std::size_t k = 0; k < s.dim(); ++k) out << (k ? " " : "") << c[k];
    out << '\n';
  }
}

inline std::string format_cells(const CellSet& s) {
  std::ostringstream out;
  write_cells(out, s);
  return out.str();
}

inline void write_cell_file(const std::string& path, const CellSet& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_cells(out, s);
}

}  // namespace holey
