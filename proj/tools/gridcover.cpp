// Command line front end: exact solves, explicit constructions, periodic
// tiling search, the reproduction suite, and JSON/SVG rendering.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridcover/constructions.hpp"
#include "gridcover/incidence.hpp"
#include "gridcover/json_io.hpp"
#include "gridcover/reproduce.hpp"
#include "gridcover/solver.hpp"
#include "gridcover/svg.hpp"
#include "gridcover/tilings.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBoundsOnly = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

using namespace gridcover;

std::vector<Int> parse_grid(const std::string& s) {
  std::vector<Int> dims;
  std::string part;
  std::istringstream is(s);
  while (std::getline(is, part, 'x')) {
    if (part.empty()) throw CLI::ValidationError("--grid", "empty dimension in '" + s + "'");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != part.size() || v < 1)
      throw CLI::ValidationError("--grid", "bad dimension '" + part + "'");
    dims.push_back(Int(v));
  }
  if (dims.empty() || dims.size() > kMaxDim)
    throw CLI::ValidationError("--grid", "expected 1.." + std::to_string(kMaxDim) +
                                             " dimensions like 5x5");
  return dims;
}

int effective_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("GRIDCOVER_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

Shape load_shape(const std::string& spec) {
  if (auto s = shape_by_name(spec)) return *s;
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("unknown shape and unreadable file: " + spec);
  Json j = Json::parse(in);
  Shape shape;
  if (j.contains("offsets")) {
    shape.name = j.value("name", std::string("custom"));
    shape.offsets = PointSet(2, jio::points_from_json(j["offsets"]));
  } else {
    shape.name = "custom";
    shape.offsets = pointset_from_json(j);
  }
  if (shape.offsets.d != 2) throw std::invalid_argument("shape offsets must be 2D");
  return shape;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

void emit_cover(const Cover& cover, bool as_json, const std::string& svg_path) {
  if (as_json) std::cout << to_json(cover).dump(2) << "\n";
  if (!svg_path.empty()) write_file(svg_path, render_svg(cover));
}

struct SolveArgs {
  std::string grid;
  std::string family;
  int max_inner_corners = -2;  // -2: flag absent, -1: explicitly unbounded
  int degree = 0;
  std::string shape;
  std::string r2;
  std::string lattice = "integer";
  double time_budget = 0;
  int threads = 0;
  std::string route = "auto";
  bool json = false;
  std::string svg;
};

CurveFamily family_from_args(const SolveArgs& a) {
  auto kind = parse_family(a.family);
  if (!kind) throw CLI::ValidationError("--family", "unknown family '" + a.family + "'");
  switch (*kind) {
    case FamilyKind::orthoconvex:
      return CurveFamily::orthoconvex(a.max_inner_corners == -2 ? kOrthoUnbounded
                                                                : a.max_inner_corners);
    case FamilyKind::algebraic:
      if (a.degree < 1) throw CLI::ValidationError("--degree", "algebraic needs --degree");
      return CurveFamily::algebraic(a.degree);
    case FamilyKind::fixed_shape: {
      if (a.shape.empty())
        throw CLI::ValidationError("--shape", "fixed-shape needs --shape");
      return CurveFamily::fixed_shape(load_shape(a.shape).offsets);
    }
    case FamilyKind::fixed_radius_circle: {
      if (a.r2.empty()) throw CLI::ValidationError("--r2", "fixed-radius-circle needs --r2");
      CenterLattice lat = CenterLattice::integer;
      if (a.lattice == "half-integer")
        lat = CenterLattice::half_integer;
      else if (a.lattice != "integer")
        throw CLI::ValidationError("--lattice", "use integer or half-integer");
      return CurveFamily::fixed_radius_circle(Rat::parse(a.r2), lat);
    }
    default:
      return CurveFamily{*kind};
  }
}

int cmd_solve(const SolveArgs& a) {
  PointSet P = grid_points(GridSpec{parse_grid(a.grid)});
  CurveFamily fam = family_from_args(a);
  SolveOptions opt;
  if (a.time_budget > 0) opt.time_budget_sec = a.time_budget;
  opt.threads = effective_threads(a.threads);
  if (a.route == "partition")
    opt.route = SolveOptions::Route::partition;
  else if (a.route == "candidates")
    opt.route = SolveOptions::Route::candidates;
  else if (a.route != "auto")
    throw CLI::ValidationError("--route", "use auto, partition, or candidates");

  SolveResult r = exact_min_cover(P, fam, opt);
  if (a.json) {
    Json j;
    j["grid"] = a.grid;
    j["family"] = to_json(fam);
    j["bounds"] = to_json(r.bounds);
    j["exact"] = r.bounds.exact ? Json(*r.bounds.exact) : Json(nullptr);
    if (r.cover) j["cover"] = to_json(*r.cover);
    std::cout << j.dump(2) << "\n";
  } else {
    if (r.bounds.exact)
      std::cout << "exact: " << *r.bounds.exact << "\n";
    else
      std::cout << "bounds: [" << r.bounds.lower << ", " << r.bounds.upper << "]\n";
    std::cout << "method: " << r.bounds.method << "\n";
    if (r.cover) std::cout << "curves: " << r.cover->curves.size() << "\n";
  }
  if (!a.svg.empty() && r.cover) write_file(a.svg, render_svg(*r.cover));
  return r.proven_optimal ? kExitOk : kExitBoundsOnly;
}

int cmd_construct(const std::string& kind, const std::string& grid, Int n, int k,
                  bool as_json, const std::string& svg_path) {
  Cover cover;
  if (kind == "lines") {
    cover = line_cover_grid(GridSpec{parse_grid(grid)});
  } else if (kind == "skew") {
    cover = skew_line_cover(n);
  } else if (kind == "monotone") {
    PointSet P = grid_points(GridSpec{parse_grid(grid)});
    cover = *exact_min_cover(P, CurveFamily{FamilyKind::monotone}).cover;
  } else if (kind == "convex-rings") {
    cover = convex_ring_cover(GridSpec{parse_grid(grid)});
  } else if (kind == "concentric-circles") {
    cover = concentric_circle_cover(n);
  } else if (kind == "strict-peel") {
    cover = strictly_convex_peel(n);
  } else if (kind == "algebraic-bundles") {
    cover = algebraic_bundle_cover(n, k);
  } else {
    throw CLI::ValidationError(
        "kind", "use lines, skew, monotone, convex-rings, concentric-circles, "
                "strict-peel, or algebraic-bundles");
  }
  if (!verify_cover(cover).ok) {
    std::cerr << "internal error: constructed cover failed verification\n";
    return 1;
  }
  if (!as_json) std::cout << "curves: " << cover.curves.size() << "\n";
  emit_cover(cover, as_json, svg_path);
  return kExitOk;
}

int cmd_tile(const std::string& shape_spec, Int max_period, Int n, bool tile_like,
             const std::string& average, bool as_json, const std::string& svg_path) {
  Shape shape = load_shape(shape_spec);
  TilingKind kind = TilingKind::exact_tiling;
  std::optional<Rat> avg;
  if (tile_like || shape.name == "square2") {
    kind = TilingKind::tile_like;
    avg = average.empty() ? Rat(7) : Rat::parse(average);
  }
  auto pat = find_periodic_tiling(shape, max_period, kind, avg);
  if (!pat) {
    std::cerr << "no periodic pattern within period " << max_period << "\n";
    return kExitNotFound;
  }
  Json out;
  out["pattern"] = to_json(*pat);
  std::optional<Cover> clip;
  if (n > 0) {
    clip = clip_to_grid(*pat, n);
    out["clip"] = to_json(*clip);
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "pattern: det " << pat->u[0] * pat->v[1] << ", " << pat->placements.size()
              << " placement(s), kind "
              << (pat->kind == TilingKind::exact_tiling ? "exact-tiling" : "tile-like")
              << ", average " << pat->average.str() << "\n";
    if (clip) std::cout << "clip " << n << "x" << n << ": " << clip->curves.size()
                        << " curves\n";
  }
  if (!svg_path.empty()) {
    if (clip)
      write_file(svg_path, render_svg(*clip));
    else
      write_file(svg_path, render_svg(*pat));
  }
  return kExitOk;
}

int cmd_reproduce(const std::vector<std::string>& only, bool as_json) {
  std::vector<CriterionResult> results = run_acceptance(only);
  bool all = true;
  if (as_json) {
    Json arr = Json::array();
    for (const CriterionResult& r : results) {
      Json j;
      j["id"] = r.id;
      j["name"] = r.name;
      j["pass"] = r.pass;
      j["detail"] = r.detail;
      j["seconds"] = r.seconds;
      arr.push_back(j);
      all &= r.pass;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const CriterionResult& r : results) {
      std::printf("%2d %-24s %s  %7.2fs  %s\n", r.id, r.name.c_str(),
                  r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
      all &= r.pass;
    }
    std::printf("%zu criteria, %s\n", results.size(), all ? "all passed" : "FAILURES");
  }
  return all ? kExitOk : 1;
}

int cmd_render(const std::string& input, const std::string& output) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot read " << input << "\n";
    return kExitData;
  }
  std::string svg;
  try {
    Json j = Json::parse(in);
    if (j.contains("curves") && j.contains("pointset"))
      svg = render_svg(cover_from_json(j));
    else if (j.contains("placements"))
      svg = render_svg(pattern_from_json(j));
    else if (j.contains("points") && j.contains("d"))
      svg = render_svg(pointset_from_json(j));
    else {
      std::cerr << "input is not a cover, tiling pattern, or point set\n";
      return kExitData;
    }
  } catch (const Json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitData;
  }
  write_file(output, svg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum curve covers of finite grids"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve = app.add_subcommand("solve", "exact minimum cover of a grid");
  solve->add_option("--grid", sa.grid, "grid dimensions, e.g. 5x5 or 3x4x2")->required();
  solve->add_option("--family", sa.family, "curve family name")->required();
  solve->add_option("--max-inner-corners", sa.max_inner_corners,
                    "orthoconvex corner budget (-1 = unbounded)");
  solve->add_option("--degree", sa.degree, "algebraic curve degree");
  solve->add_option("--shape", sa.shape, "built-in shape name or shape JSON file");
  solve->add_option("--r2", sa.r2, "squared radius for fixed-radius-circle, e.g. 2 or 5/4");
  solve->add_option("--lattice", sa.lattice, "center lattice: integer or half-integer");
  solve->add_option("--time-budget", sa.time_budget, "solver budget in seconds");
  solve->add_option("--threads", sa.threads, "worker threads (GRIDCOVER_THREADS fallback)");
  solve->add_option("--route", sa.route, "solver route: auto, partition, candidates");
  solve->add_flag("--json", sa.json, "emit JSON");
  solve->add_option("--svg", sa.svg, "write an SVG rendering to this path");

  std::string c_kind, c_grid, c_svg;
  Int c_n = 0;
  int c_k = 1;
  bool c_json = false;
  CLI::App* construct = app.add_subcommand("construct", "run an explicit construction");
  construct->add_option("kind", c_kind, "construction kind")->required();
  construct->add_option("--grid", c_grid, "grid dimensions for grid constructions");
  construct->add_option("--n", c_n, "square side for square constructions");
  construct->add_option("--k", c_k, "bundle degree for algebraic-bundles");
  construct->add_flag("--json", c_json, "emit JSON");
  construct->add_option("--svg", c_svg, "write an SVG rendering to this path");

  std::string t_shape, t_avg, t_svg;
  Int t_period = 8, t_n = 0;
  bool t_like = false, t_json = false;
  CLI::App* tile = app.add_subcommand("tile", "search for a periodic pattern");
  tile->add_option("shape", t_shape, "built-in shape name or shape JSON file")->required();
  tile->add_option("--max-period", t_period, "largest lattice period to try");
  tile->add_option("--n", t_n, "also clip the pattern to an n x n grid");
  tile->add_flag("--tile-like", t_like, "allow overlaps at a declared average");
  tile->add_option("--average", t_avg, "declared average for tile-like patterns");
  tile->add_flag("--json", t_json, "emit JSON");
  tile->add_option("--svg", t_svg, "write an SVG rendering to this path");

  std::vector<std::string> r_only;
  bool r_json = false;
  CLI::App* reproduce = app.add_subcommand("reproduce", "run the acceptance table");
  reproduce->add_option("--only", r_only, "restrict to criteria by id or name substring");
  reproduce->add_flag("--json", r_json, "emit JSON");

  std::string rd_in, rd_out = "out.svg";
  CLI::App* render = app.add_subcommand("render", "render a JSON file to SVG");
  render->add_option("input", rd_in, "cover, pattern, or point set JSON")->required();
  render->add_option("--svg,output", rd_out, "output SVG path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(sa);
    if (construct->parsed()) return cmd_construct(c_kind, c_grid, c_n, c_k, c_json, c_svg);
    if (tile->parsed()) return cmd_tile(t_shape, t_period, t_n, t_like, t_avg, t_json, t_svg);
    if (reproduce->parsed()) return cmd_reproduce(r_only, r_json);
    if (render->parsed()) return cmd_render(rd_in, rd_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const JsonError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "instance too large: " << e.what() << "\n";
    return kExitBoundsOnly;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
