#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcross.h"

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(rx_status st) {
  std::cerr << "error: " << rx_last_error() << "\n";
  switch (st) {
    case RX_ERROR_PARSE:
    case RX_ERROR_PARAMETER:
    case RX_ERROR_FORMAT:
      std::exit(2);
    case RX_ERROR_DEGENERACY:
      std::exit(3);
    case RX_ERROR_BUDGET:
      std::exit(4);
    default:
      std::exit(1);
  }
}

[[noreturn]] void fail_io(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(2);
}

struct GraphHandle {
  rx_graph* g = nullptr;
  ~GraphHandle() { rx_graph_free(g); }
};

struct CatalogHandle {
  rx_catalog* c = nullptr;
  ~CatalogHandle() { rx_catalog_free(c); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { rx_string_free(s); }
};

rx_graph* load_graph(const std::string& path) {
  rx_status st;
  rx_graph* g = rx_graph_parse_file(path.c_str(), &st);
  if (!g) fail(st);
  return g;
}

rx_catalog* load_catalog(const std::string& path) {
  rx_status st;
  rx_catalog* c = rx_catalog_load_file(path.c_str(), &st);
  if (!c) fail(st);
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_io("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) fail_io("cannot write file: " + path);
}

// Options shared by every command that runs the drawing pipeline.
struct PipelineOpts {
  std::string epsilon = "1/4";
  int k_max = 8;
  std::string parts = "auto";
  std::string catalog_path;
  int grid_side = 0;
  long long budget = 0;
  int effort = 40;
  std::uint64_t seed = 0;
  bool timings = false;

  void attach(CLI::App* cmd, bool with_parts) {
    cmd->add_option("--epsilon", epsilon, "regularity target (rational)");
    cmd->add_option("--kmax", k_max, "partition size cap");
    if (with_parts)
      cmd->add_option("--parts", parts, "auto | singleton")
          ->check(CLI::IsMember({"auto", "singleton"}));
    cmd->add_option("--catalog", catalog_path, "order-type catalog file");
    cmd->add_option("--grid-side", grid_side,
                    "enumeration grid side when no catalog file is given");
    cmd->add_option("--budget", budget, "enumeration budget (0 = exhaustive)");
    cmd->add_option("--effort", effort, "violating-pair search restarts");
    cmd->add_option("--seed", seed, "determinism seed");
    cmd->add_flag("--timings", timings, "report real stage timings");
  }

  std::string config_json() const {
    ordered_json j;
    j["epsilon"] = epsilon;
    j["k_max"] = k_max;
    j["mode"] = parts;
    if (!catalog_path.empty()) j["catalog_path"] = catalog_path;
    if (grid_side) j["grid_side"] = grid_side;
    if (budget) j["budget"] = budget;
    j["effort"] = effort;
    j["seed"] = seed;
    j["timings"] = timings;
    return j.dump();
  }
};

// Turns the pipeline JSON's exact points back into the "x y" text format.
std::string points_text_from_json(const ordered_json& points) {
  std::ostringstream out;
  for (const auto& p : points) {
    const std::string xn = p[0], xd = p[1], yn = p[2], yd = p[3];
    out << xn;
    if (xd != "1") out << "/" << xd;
    out << " " << yn;
    if (yd != "1") out << "/" << yd;
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rectilinear crossing number toolkit"};
  app.require_subcommand(1);

  // ---- draw ----
  auto* draw = app.add_subcommand(
      "draw", "partition, reduce, solve small, blow up to a drawing");
  struct {
    std::string input, svg_out, json_out;
    PipelineOpts pipe;
  } draw_opt;
  draw->add_option("--input", draw_opt.input, "graph file")->required();
  draw_opt.pipe.attach(draw, true);
  draw->add_option("--svg", draw_opt.svg_out, "also render the drawing to SVG");
  draw->add_option("--out", draw_opt.json_out, "write JSON here instead of stdout");
  draw->callback([&] {
    GraphHandle g{load_graph(draw_opt.input)};
    rx_status st;
    StringHandle out{rx_draw_json(g.g, draw_opt.pipe.config_json().c_str(), &st)};
    if (!out.s) fail(st);
    if (!draw_opt.svg_out.empty()) {
      const auto j = ordered_json::parse(out.s);
      const auto pts = points_text_from_json(j["points"]);
      StringHandle svg{rx_render_svg(g.g, pts.c_str(), &st)};
      if (!svg.s) fail(st);
      spill(draw_opt.svg_out, svg.s);
    }
    if (draw_opt.json_out.empty())
      std::cout << out.s;
    else
      spill(draw_opt.json_out, out.s);
  });

  // ---- exact ----
  auto* exact = app.add_subcommand(
      "exact", "exact minimum crossing value over a catalog");
  struct {
    std::string input, catalog;
  } exact_opt;
  exact->add_option("--input", exact_opt.input, "graph file")->required();
  exact->add_option("--catalog", exact_opt.catalog, "catalog file")->required();
  exact->callback([&] {
    GraphHandle g{load_graph(exact_opt.input)};
    CatalogHandle c{load_catalog(exact_opt.catalog)};
    rx_status st;
    StringHandle out{rx_exact_json(g.g, c.c, &st)};
    if (!out.s) fail(st);
    std::cout << out.s;
  });

  // ---- count ----
  auto* count = app.add_subcommand(
      "count", "count crossings of a concrete placement");
  struct {
    std::string input, points;
  } count_opt;
  count->add_option("--input", count_opt.input, "graph file")->required();
  count->add_option("--points", count_opt.points, "one 'x y' line per vertex")
      ->required();
  count->callback([&] {
    GraphHandle g{load_graph(count_opt.input)};
    const auto pts = slurp(count_opt.points);
    rx_status st;
    StringHandle out{rx_count_json(g.g, pts.c_str(), &st)};
    if (!out.s) fail(st);
    std::cout << out.s;
  });

  // ---- partition ----
  auto* part = app.add_subcommand(
      "partition", "weak regular partition with deviation certificate");
  struct {
    std::string input, epsilon = "1/4", text_out;
    int k_max = 8, effort = 40;
    std::uint64_t seed = 0;
  } part_opt;
  part->add_option("--input", part_opt.input, "graph file")->required();
  part->add_option("--epsilon", part_opt.epsilon, "regularity target");
  part->add_option("--kmax", part_opt.k_max, "partition size cap");
  part->add_option("--effort", part_opt.effort, "search restarts");
  part->add_option("--seed", part_opt.seed, "determinism seed");
  part->add_option("--out-partition", part_opt.text_out,
                   "write the line-per-vertex text form here");
  part->callback([&] {
    GraphHandle g{load_graph(part_opt.input)};
    rx_status st;
    StringHandle out{rx_partition_json(g.g, part_opt.epsilon.c_str(),
                                       part_opt.k_max, part_opt.effort,
                                       part_opt.seed, &st)};
    if (!out.s) fail(st);
    if (!part_opt.text_out.empty()) {
      const auto j = ordered_json::parse(out.s);
      std::ostringstream text;
      for (const auto& q : j["partition"]) text << q.get<int>() << "\n";
      spill(part_opt.text_out, text.str());
    }
    std::cout << out.s;
  });

  // ---- cutdist ----
  auto* cut = app.add_subcommand("cutdist", "cut distance of two graphs");
  struct {
    std::string a, b;
    int cap = 16, effort = 40;
    std::uint64_t seed = 0;
  } cut_opt;
  cut->add_option("--a", cut_opt.a, "first graph file")->required();
  cut->add_option("--b", cut_opt.b, "second graph file")->required();
  cut->add_option("--exact-cap", cut_opt.cap,
                  "largest n solved exhaustively (heuristic beyond)");
  cut->add_option("--effort", cut_opt.effort, "heuristic restarts");
  cut->add_option("--seed", cut_opt.seed, "determinism seed");
  cut->callback([&] {
    GraphHandle a{load_graph(cut_opt.a)}, b{load_graph(cut_opt.b)};
    rx_status st;
    StringHandle out{rx_cutdist_json(a.g, b.g, cut_opt.cap, cut_opt.effort,
                                     cut_opt.seed, &st)};
    if (!out.s) fail(st);
    std::cout << out.s;
  });

  // ---- kplanar ----
  auto* kpl = app.add_subcommand(
      "kplanar", "minimum monochromatic crossings over k edge colors");
  struct {
    std::string input, catalog;
    int k = 2;
    long long cap = 100000000;
  } kpl_opt;
  kpl->add_option("--input", kpl_opt.input, "graph file")->required();
  kpl->add_option("-k,--colors", kpl_opt.k, "number of colors")->required();
  kpl->add_option("--catalog", kpl_opt.catalog, "catalog file")->required();
  kpl->add_option("--cap", kpl_opt.cap, "coloring enumeration cap");
  kpl->callback([&] {
    GraphHandle g{load_graph(kpl_opt.input)};
    CatalogHandle c{load_catalog(kpl_opt.catalog)};
    rx_status st;
    StringHandle out{rx_kplanar_json(g.g, kpl_opt.k, c.c, kpl_opt.cap, &st)};
    if (!out.s) fail(st);
    std::cout << out.s;
  });

  // ---- estimate ----
  auto* est = app.add_subcommand(
      "estimate", "sampled induced-subgraph estimator");
  struct {
    std::string input, catalog;
    int t = 0, trials = 50;
    std::uint64_t seed = 0;
  } est_opt;
  est->add_option("--input", est_opt.input, "graph file")->required();
  est->add_option("-t,--sample-size", est_opt.t, "induced subset size")
      ->required();
  est->add_option("--trials", est_opt.trials, "number of sampled subsets");
  est->add_option("--seed", est_opt.seed, "determinism seed");
  est->add_option("--catalog", est_opt.catalog, "catalog file for t points")
      ->required();
  est->callback([&] {
    GraphHandle g{load_graph(est_opt.input)};
    CatalogHandle c{load_catalog(est_opt.catalog)};
    rx_status st;
    StringHandle out{rx_estimate_json(g.g, est_opt.t, est_opt.trials,
                                      est_opt.seed, c.c, &st)};
    if (!out.s) fail(st);
    std::cout << out.s;
  });

  // ---- experiment ----
  auto* exp = app.add_subcommand(
      "experiment", "quasi-random trend harness (self-normalized ratios)");
  struct {
    std::string family, p = "1/2", path, format = "csv";
    int n = 0, trials = 1;
    PipelineOpts pipe;
  } exp_opt;
  exp->add_option("--family", exp_opt.family, "gnp | paley | complete | file")
      ->required();
  exp->add_option("--n,--q", exp_opt.n, "vertex count (prime q for paley)");
  exp->add_option("--p", exp_opt.p, "edge density for gnp");
  exp->add_option("--trials", exp_opt.trials, "trials per family point");
  exp->add_option("--path", exp_opt.path, "graph file for family=file");
  exp->add_option("--format", exp_opt.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  exp_opt.pipe.attach(exp, false);
  exp->callback([&] {
    ordered_json spec = ordered_json::parse(exp_opt.pipe.config_json());
    spec["family"] = exp_opt.family;
    spec["n"] = exp_opt.n;
    spec["p"] = exp_opt.p;
    spec["trials"] = exp_opt.trials;
    if (!exp_opt.path.empty()) spec["path"] = exp_opt.path;
    rx_status st;
    StringHandle out{rx_experiment_report(spec.dump().c_str(),
                                          exp_opt.format.c_str(), &st)};
    if (!out.s) fail(st);
    std::cout << out.s;
  });

  // ---- catalog ----
  auto* cat = app.add_subcommand("catalog", "order-type catalog tools");
  cat->require_subcommand(1);

  auto* build = cat->add_subcommand("build", "enumerate grid order types");
  struct {
    int n = 0, side = 0;
    long long budget = 0;
    std::uint64_t seed = 0;
    std::string out;
  } build_opt;
  build->add_option("-n,--points", build_opt.n, "points per set")->required();
  build->add_option("--grid-side", build_opt.side, "grid side length")
      ->required();
  build->add_option("--budget", build_opt.budget,
                    "max subsets to test (0 = exhaustive)");
  build->add_option("--seed", build_opt.seed, "sampling seed");
  build->add_option("-o,--out", build_opt.out, "catalog file to write")
      ->required();
  build->callback([&] {
    rx_status st;
    CatalogHandle c{rx_catalog_build(build_opt.n, build_opt.side,
                                     build_opt.budget, build_opt.seed, &st)};
    if (!c.c) fail(st);
    if (auto rc = rx_catalog_save_file(c.c, build_opt.out.c_str()); rc != RX_OK)
      fail(rc);
    StringHandle info{rx_catalog_info_json(c.c, &st)};
    if (!info.s) fail(st);
    std::cout << info.s;
  });

  auto* ingest = cat->add_subcommand(
      "ingest", "import a raw point-set database (fixed-width coordinates)");
  struct {
    int n = 0;
    std::string input, out;
  } ing_opt;
  ingest->add_option("-n,--points", ing_opt.n, "points per record")->required();
  ingest->add_option("--input", ing_opt.input, "raw database file")->required();
  ingest->add_option("-o,--out", ing_opt.out, "catalog file to write")
      ->required();
  ingest->callback([&] {
    const auto bytes = slurp(ing_opt.input);
    rx_status st;
    CatalogHandle c{rx_catalog_ingest(
        ing_opt.n, reinterpret_cast<const std::uint8_t*>(bytes.data()),
        bytes.size(), &st)};
    if (!c.c) fail(st);
    if (auto rc = rx_catalog_save_file(c.c, ing_opt.out.c_str()); rc != RX_OK)
      fail(rc);
    StringHandle info{rx_catalog_info_json(c.c, &st)};
    if (!info.s) fail(st);
    std::cout << info.s;
  });

  auto* info = cat->add_subcommand("info", "describe a catalog file");
  struct {
    std::string catalog;
  } info_opt;
  info->add_option("--catalog", info_opt.catalog, "catalog file")->required();
  info->callback([&] {
    CatalogHandle c{load_catalog(info_opt.catalog)};
    rx_status st;
    StringHandle out{rx_catalog_info_json(c.c, &st)};
    if (!out.s) fail(st);
    std::cout << out.s;
  });

  // ---- render ----
  auto* render = app.add_subcommand("render", "SVG of a concrete placement");
  struct {
    std::string input, points, out;
  } render_opt;
  render->add_option("--input", render_opt.input, "graph file")->required();
  render->add_option("--points", render_opt.points, "one 'x y' line per vertex")
      ->required();
  render->add_option("-o,--out", render_opt.out,
                     "SVG file (stdout when omitted)");
  render->callback([&] {
    GraphHandle g{load_graph(render_opt.input)};
    const auto pts = slurp(render_opt.points);
    rx_status st;
    StringHandle out{rx_render_svg(g.g, pts.c_str(), &st)};
    if (!out.s) fail(st);
    if (render_opt.out.empty())
      std::cout << out.s;
    else
      spill(render_opt.out, out.s);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return 0;
}
