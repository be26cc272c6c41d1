// holey: command-line front end for the polyomino hole toolkit.
//
// Exit codes: 0 ok, 1 invariant violation, 2 usage or input error, 3 capacity error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "holey/holey.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace holey;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("HOLEY_CELL_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || v == 0) throw UsageError("HOLEY_CELL_BUDGET must be a positive integer");
  return v;
}

// Flag beats environment beats built-in default.
std::uint64_t resolve_budget(std::uint64_t flag, std::uint64_t fallback) {
  if (flag != 0) return flag;
  return env_budget().value_or(fallback);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json cells_json(const CellSet& s) {
  json out = json::array();
  for (const auto& c : s) out.push_back(std::vector<std::int64_t>(c.coords().begin(), c.coords().end()));
  return out;
}

json census_json(const FaceCensus& c) {
  return json{{"dim", c.dim}, {"n", c.n}, {"holes", c.holes}, {"b", c.b}, {"p_h", c.p_h}, {"p_o", c.p_o}};
}

json build_json(const BuildReport& r) {
  json j = census_json(r.census);
  j["vol_D"] = r.vol_domain;
  j["vol_shell"] = r.vol_shell;
  return j;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("invalid integer '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

// "lo..hi" with scalar or comma-separated corners, inclusive on every axis.
BoundingBox parse_box(const std::string& text, std::size_t d) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("box must look like lo..hi");
  auto corner = [&](const std::string& part) {
    auto v = parse_int_list(part);
    if (v.size() == 1) v.assign(d, v[0]);
    if (v.size() != d) throw UsageError("box corner '" + part + "' needs 1 or " + std::to_string(d) + " values");
    return Cell(std::span<const std::int64_t>(v));
  };
  BoundingBox box{corner(text.substr(0, dots)), corner(text.substr(dots + 2))};
  for (std::size_t k = 0; k < d; ++k) {
    if (box.lo[k] > box.hi[k]) throw UsageError("box is empty along axis " + std::to_string(k));
  }
  return box;
}

void emit_cells(const CellSet& s, const std::string& path) {
  if (path.empty() || path == "-") {
    write_cells(std::cout, s);
  } else {
    write_cell_file(path, s);
  }
}

void emit_construction(const Construction& c, const std::string& out) {
  write_cell_file(out, c.polyomino);
  print(build_json(c.report));
}

json fat_torus_json(const FatTorus& f) {
  return json{{"n", f.n_list},         {"c", f.c},
              {"det", f.det},          {"systole_squared", f.systole_squared},
              {"systole", f.systole},  {"normalized_systole", f.normalized}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyomino hole toolkit: Lee codes, hole-rich constructions, bounds and tori"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "holey 1.0.0");
  int status = kOk;

  std::size_t dim = 2;
  std::uint64_t budget_flag = 0;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget_flag, "Cell budget (overrides HOLEY_CELL_BUDGET)")->check(CLI::PositiveNumber);
  };

  // code
  auto* code = app.add_subcommand("code", "Perfect Lee codes");
  code->require_subcommand(1);
  auto* code_gen = code->add_subcommand("gen", "List the code words in cell format");
  code_gen->add_option("-d,--dim", dim, "Dimension")->required()->check(CLI::Range(1, 8));
  add_budget(code_gen);
  code_gen->callback([&] {
    const auto c = code_words(dim, resolve_budget(budget_flag, kDefaultCodeBudget));
    write_cells(std::cout, CellSet(dim, c.words));
  });
  auto* code_verify = code->add_subcommand("verify", "Check that jacks around the code partition the space");
  code_verify->add_option("-d,--dim", dim, "Dimension")->required()->check(CLI::Range(1, 8));
  add_budget(code_verify);
  code_verify->callback([&] {
    const auto r = verify_perfect(dim, resolve_budget(budget_flag, kDefaultCodeBudget));
    print(json{{"dim", dim},
               {"modulus", lee_modulus(dim)},
               {"covered_once", r.covered_once},
               {"jack_count", r.jack_count},
               {"cell_count", r.cell_count}});
    if (!r.covered_once) status = kViolation;
  });

  // pattern
  auto* pattern = app.add_subcommand("pattern", "The periodic hole pattern K_d");
  pattern->require_subcommand(1);
  auto* sample = pattern->add_subcommand("sample", "Print the pattern cells inside a box");
  std::string box_text;
  std::string out_path;
  sample->add_option("-d,--dim", dim, "Dimension")->required()->check(CLI::Range(2, 8));
  sample->add_option("--box", box_text, "Inclusive window lo..hi, e.g. 0..9 or 0,0..9,3")->required();
  sample->add_option("-o,--out", out_path, "Cell file (default: standard output)");
  add_budget(sample);
  sample->callback([&] {
    const auto box = parse_box(box_text, dim);
    check_budget(box.volume(), resolve_budget(budget_flag, kDefaultCellBudget), "pattern sample");
    std::vector<Cell> cells;
    std::vector<std::int64_t> extent(dim);
    for (std::size_t k = 0; k < dim; ++k) extent[k] = box.hi[k] - box.lo[k] + 1;
    detail::for_each_in_box(box.lo, extent, [&](const Cell& c) {
      if (kd_contains(dim, c)) cells.push_back(c);
    });
    emit_cells(CellSet(dim, std::move(cells)), out_path);
  });

  // build
  auto* build = app.add_subcommand("build", "Hole-rich polyomino constructions");
  build->require_subcommand(1);
  std::uint64_t index = 0;
  auto* build_cube = build->add_subcommand("cube", "Cube construction P(Q_i)");
  auto* build_interp = build->add_subcommand("interp", "Interpolated construction with m parallelotopes");
  auto* build_n = build->add_subcommand("n", "Best construction with exactly n tiles");
  for (auto* sub : {build_cube, build_interp, build_n}) {
    sub->add_option("-d,--dim", dim, "Dimension")->required()->check(CLI::Range(2, 8));
    sub->add_option("-o,--out", out_path, "Cell file to write")->required();
    add_budget(sub);
  }
  build_cube->add_option("-i", index, "Cube index i >= 1")->required();
  build_interp->add_option("-m", index, "Parallelotope count m")->required();
  build_n->add_option("-n", index, "Tile count n >= 1")->required();
  build_cube->callback([&] {
    emit_construction(build_cube_polyomino(dim, index, resolve_budget(budget_flag, kDefaultCellBudget)), out_path);
  });
  build_interp->callback([&] {
    emit_construction(build_interpolated(dim, index, resolve_budget(budget_flag, kDefaultCellBudget)), out_path);
  });
  build_n->callback([&] {
    emit_construction(build_for_n(dim, index, resolve_budget(budget_flag, kDefaultCellBudget)), out_path);
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Face census, holes and bounds of a cell file");
  std::string in_path;
  analyze->add_option("path", in_path, "Cell file")->required();
  add_budget(analyze);
  analyze->callback([&] {
    const std::uint64_t budget = resolve_budget(budget_flag, kDefaultCellBudget);
    const CellSet s = read_cell_file(in_path);
    const FaceCensus c = face_census(s, budget);
    std::uint64_t lower = 0, upper = 0;
    if (s.dim() >= 2 && c.n > 0) {
      lower = lower_bound(s.dim(), c.n, budget);
      upper = upper_bound(s.dim(), c.n);
    }
    json j = census_json(c);
    j["identity_ok"] = c.identity_holds();
    j["connected"] = is_rook_connected(s, budget);
    j["lower"] = lower;
    j["upper"] = upper;
    print(j);
    if (!c.identity_holds()) status = kViolation;
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the maximum hole count");
  std::uint64_t n_tiles = 0;
  bool exact = false;
  unsigned jobs = 1;
  std::uint64_t limit = 0;
  bounds->add_option("-d,--dim", dim, "Dimension")->required()->check(CLI::Range(2, 8));
  bounds->add_option("-n", n_tiles, "Tile count")->required()->check(CLI::PositiveNumber);
  bounds->add_flag("--exact", exact, "Also compute the exact maximum by enumeration");
  bounds->add_option("--jobs", jobs, "Enumeration threads")->check(CLI::PositiveNumber);
  bounds->add_option("--limit", limit, "Largest n the enumeration accepts");
  add_budget(bounds);
  bounds->callback([&] {
    BoundOptions opts;
    opts.exact = exact;
    opts.jobs = jobs;
    if (limit != 0) opts.enumeration_limit = limit;
    opts.budget = resolve_budget(budget_flag, kDefaultCellBudget);
    const BoundReport r = bound_report(dim, n_tiles, opts);
    json j{{"dim", r.d}, {"n", r.n}, {"lower", r.lower}, {"upper", r.upper}};
    j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    j["simplified_upper"] = r.simplified_upper;
    j["simplified_violated"] = r.simplified_violated();
    j["sandwich_ok"] = r.sandwich_holds();
    print(j);
    if (!r.sandwich_holds()) status = kViolation;
  });

  // bruteforce
  auto* brute = app.add_subcommand("bruteforce", "Exact maximum hole count by enumerating fixed polyominoes");
  brute->add_option("-d,--dim", dim, "Dimension")->required()->check(CLI::Range(1, 8));
  brute->add_option("-n", n_tiles, "Tile count")->required()->check(CLI::PositiveNumber);
  brute->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  brute->add_option("--limit", limit, "Largest n accepted");
  brute->add_option("-o,--out", out_path, "Write the witness as a cell file");
  brute->callback([&] {
    std::optional<std::uint64_t> lim;
    if (limit != 0) lim = limit;
    const auto r = brute_force_max_holes(dim, n_tiles, jobs, lim);
    json j{{"dim", dim}, {"n", n_tiles}, {"count", r.count}, {"max_holes", r.max_holes}};
    j["witness"] = r.witness ? cells_json(*r.witness) : json(nullptr);
    print(j);
    if (!out_path.empty() && r.witness) write_cell_file(out_path, *r.witness);
  });

  // torus
  auto* torus = app.add_subcommand("torus", "Hole-rich polyominoes on flat tori");
  torus->require_subcommand(1);
  auto* torus_build = torus->add_subcommand("build", "Optimal toric polyomino for parameters n_1..n_{d-1}, c");
  std::string n_text;
  std::int64_t c_param = 0;
  torus_build->add_option("-d,--dim", dim, "Dimension")->required()->check(CLI::Range(2, 8));
  torus_build->add_option("--n", n_text, "Comma-separated n_1,...,n_{d-1}")->required();
  torus_build->add_option("--c", c_param, "Odd parameter c")->required();
  torus_build->add_option("-o,--out", out_path, "Write the occupied fundamental-domain cells");
  add_budget(torus_build);
  torus_build->callback([&] {
    const auto n_list = parse_int_list(n_text);
    const auto t = build_optimal_torus(dim, n_list, c_param, resolve_budget(budget_flag, kDefaultCellBudget));
    const auto census = toric_census(t.torus);
    const auto s = systole(t.torus.lattice());
    json j{{"dim", dim},
           {"n", n_list},
           {"c", c_param},
           {"basis", t.torus.lattice().generators()},
           {"det", t.report.det},
           {"tiles", t.report.tiles},
           {"holes", t.report.holes},
           {"connected", t.report.connected},
           {"b", census.b},
           {"p_h", census.p_h},
           {"toric_upper", toric_upper_bound(dim, t.report.tiles)},
           {"systole_squared", s.squared},
           {"systole", s.length}};
    print(j);
    if (!out_path.empty()) write_cell_file(out_path, CellSet(dim, t.torus.occupied_cells()));
    if (!t.report.connected || !census.identity_holds(dim)) status = kViolation;
  });

  auto* torus_systole = torus->add_subcommand("systole", "Shortest nonzero vector of a lattice");
  std::string basis_text;
  torus_systole->add_option("--basis", basis_text, "Rows separated by ';', e.g. \"6 0; -3 3\"")->required();
  add_budget(torus_systole);
  torus_systole->callback([&] {
    const IntegerLattice lat(parse_basis(basis_text));
    const auto s = systole(lat, resolve_budget(budget_flag, kDefaultCellBudget));
    print(json{{"dim", lat.dim()},
               {"det", lat.det()},
               {"systole_squared", s.squared},
               {"systole", s.length},
               {"vector", std::vector<std::int64_t>(s.vector.coords().begin(), s.vector.coords().end())}});
  });

  auto* torus_search = torus->add_subcommand("search", "Rank optimal tori by normalized systole");
  std::int64_t max_param = 20;
  std::size_t top = 10;
  torus_search->add_option("-d,--dim", dim, "Dimension")->required()->check(CLI::Range(2, 8));
  torus_search->add_option("--max", max_param, "Largest n_i and c scanned")->check(CLI::PositiveNumber);
  torus_search->add_option("--top", top, "Entries to print (0 prints all)");
  add_budget(torus_search);
  torus_search->callback([&] {
    const auto list = search_fat_tori(dim, max_param, resolve_budget(budget_flag, kDefaultCellBudget));
    json ranked = json::array();
    for (std::size_t i = 0; i < list.size() && (top == 0 || i < top); ++i) ranked.push_back(fat_torus_json(list[i]));
    print(json{{"dim", dim}, {"max", max_param}, {"scanned", list.size()}, {"ranked", ranked}});
  });

  // export
  auto* exp = app.add_subcommand("export", "Export cell files to other formats");
  exp->require_subcommand(1);
  auto* obj = exp->add_subcommand("obj", "Wavefront OBJ mesh of a 3-dimensional cell file");
  obj->add_option("in", in_path, "Cell file")->required();
  obj->add_option("out", out_path, "OBJ file")->required();
  obj->callback([&] {
    const CellSet s = read_cell_file(in_path);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    const auto stats = write_obj(out, s);
    print(json{{"cubes", s.size()}, {"vertices", stats.vertices}, {"faces", stats.faces}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
