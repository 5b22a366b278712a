#include "rcross.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "catalog.hpp"
#include "crossings.hpp"
#include "errors.hpp"
#include "estimate.hpp"
#include "json.hpp"
#include "pipeline.hpp"
#include "regularity.hpp"
#include "svg.hpp"

using nlohmann::ordered_json;

struct rx_graph {
  rcross::AnyGraph g;
};

struct rx_catalog {
  rcross::OrderTypeCatalog c;
};

namespace {

thread_local std::string t_last_error;

rx_status classify(const std::exception& e) {
  if (dynamic_cast<const rcross::ParseError*>(&e)) return RX_ERROR_PARSE;
  if (dynamic_cast<const rcross::ParameterError*>(&e)) return RX_ERROR_PARAMETER;
  if (dynamic_cast<const rcross::FormatError*>(&e)) return RX_ERROR_FORMAT;
  if (dynamic_cast<const rcross::DegeneracyError*>(&e)) return RX_ERROR_DEGENERACY;
  if (dynamic_cast<const rcross::BudgetError*>(&e)) return RX_ERROR_BUDGET;
  return RX_ERROR_INTERNAL;
}

template <class F>
auto guard(rx_status* status, F&& f) -> decltype(f()) {
  try {
    auto r = f();
    if (status) *status = RX_OK;
    return r;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    if (status) *status = classify(e);
    return nullptr;
  }
}

template <class F>
rx_status run_status(F&& f) {
  try {
    f();
    return RX_OK;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return classify(e);
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const rcross::Graph& need_unweighted(const rx_graph* g, const char* what) {
  if (!std::holds_alternative<rcross::Graph>(g->g))
    throw rcross::ParameterError(std::string(what) +
                                 " needs an unweighted graph");
  return std::get<rcross::Graph>(g->g);
}

rcross::WeightedGraph as_weighted(const rx_graph* g) {
  if (std::holds_alternative<rcross::WeightedGraph>(g->g))
    return std::get<rcross::WeightedGraph>(g->g);
  return rcross::to_weighted(std::get<rcross::Graph>(g->g));
}

rcross::Rational parse_required_rational(const char* s, const char* what) {
  if (!s) throw rcross::ParameterError(std::string(what) + " missing");
  return rcross::parse_rational(s);
}

rcross::PipelineConfig config_from_json(const char* config_json) {
  rcross::PipelineConfig cfg;
  if (!config_json || !*config_json) return cfg;
  ordered_json j;
  try {
    j = ordered_json::parse(config_json);
  } catch (const std::exception& e) {
    throw rcross::ParseError(std::string("bad config JSON: ") + e.what());
  }
  if (j.contains("epsilon"))
    cfg.epsilon = rcross::parse_rational(j["epsilon"].get<std::string>());
  if (j.contains("k_max")) cfg.K_max = j["k_max"].get<int>();
  if (j.contains("mode")) {
    const auto m = j["mode"].get<std::string>();
    if (m == "auto")
      cfg.mode = rcross::PartitionMode::Auto;
    else if (m == "singleton")
      cfg.mode = rcross::PartitionMode::Singleton;
    else
      throw rcross::ParameterError("mode must be auto or singleton");
  }
  if (j.contains("catalog_path"))
    cfg.catalog.path = j["catalog_path"].get<std::string>();
  if (j.contains("grid_side")) cfg.catalog.grid_side = j["grid_side"].get<int>();
  if (j.contains("budget")) cfg.catalog.budget = j["budget"].get<long long>();
  if (j.contains("effort")) cfg.effort = j["effort"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  cfg.catalog.seed = cfg.seed;
  return cfg;
}

bool timings_flag(const char* config_json) {
  if (!config_json || !*config_json) return false;
  auto j = ordered_json::parse(config_json, nullptr, false);
  return j.is_object() && j.contains("timings") && j["timings"].get<bool>();
}

std::string rational_str(const rcross::Rational& r) {
  return rcross::format_rational(r);
}

ordered_json placement_json(const rcross::Configuration& pts) {
  auto arr = ordered_json::array();
  for (const auto& p : pts)
    arr.push_back(ordered_json::array(
        {numerator(p.x).str(), denominator(p.x).str(), numerator(p.y).str(),
         denominator(p.y).str()}));
  return arr;
}

}  // namespace

extern "C" {

const char* rx_version(void) { return "0.1.0"; }

const char* rx_last_error(void) { return t_last_error.c_str(); }

void rx_string_free(char* s) { std::free(s); }

rx_graph* rx_graph_parse(const char* text, rx_status* status) {
  return guard(status, [&]() -> rx_graph* {
    if (!text) throw rcross::ParameterError("null graph text");
    return new rx_graph{rcross::parse_graph(text)};
  });
}

rx_graph* rx_graph_parse_file(const char* path, rx_status* status) {
  return guard(status, [&]() -> rx_graph* {
    if (!path) throw rcross::ParameterError("null path");
    return new rx_graph{rcross::parse_graph_file(path)};
  });
}

rx_graph* rx_graph_complete(int n, rx_status* status) {
  return guard(status,
               [&]() -> rx_graph* { return new rx_graph{rcross::complete_graph(n)}; });
}

rx_graph* rx_graph_gnp(int n, const char* p, uint64_t seed, rx_status* status) {
  return guard(status, [&]() -> rx_graph* {
    return new rx_graph{
        rcross::gnp_graph(n, parse_required_rational(p, "density p"), seed)};
  });
}

rx_graph* rx_graph_paley(int q, rx_status* status) {
  return guard(status,
               [&]() -> rx_graph* { return new rx_graph{rcross::paley_graph(q)}; });
}

int rx_graph_order(const rx_graph* g) {
  if (!g) return -1;
  return std::visit([](const auto& gr) { return gr.n; }, g->g);
}

int rx_graph_is_weighted(const rx_graph* g) {
  return g && std::holds_alternative<rcross::WeightedGraph>(g->g) ? 1 : 0;
}

char* rx_graph_format(const rx_graph* g, rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!g) throw rcross::ParameterError("null graph");
    return dup_string(std::visit(
        [](const auto& gr) { return rcross::format_graph(gr); }, g->g));
  });
}

void rx_graph_free(rx_graph* g) { delete g; }

rx_catalog* rx_catalog_build(int n, int grid_side, long long budget,
                             uint64_t seed, rx_status* status) {
  return guard(status, [&]() -> rx_catalog* {
    return new rx_catalog{
        rcross::enumerate_grid_order_types(n, grid_side, budget, seed)};
  });
}

rx_catalog* rx_catalog_load_file(const char* path, rx_status* status) {
  return guard(status, [&]() -> rx_catalog* {
    if (!path) throw rcross::ParameterError("null path");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rcross::ParameterError(std::string("cannot read catalog file: ") + path);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    auto cat = rcross::load_catalog(bytes.str());
    cat.meta.source = "file";
    return new rx_catalog{std::move(cat)};
  });
}

rx_catalog* rx_catalog_ingest(int n, const uint8_t* bytes, size_t len,
                              rx_status* status) {
  return guard(status, [&]() -> rx_catalog* {
    if (!bytes && len) throw rcross::ParameterError("null bytes");
    return new rx_catalog{rcross::ingest_database(
        n, std::string(reinterpret_cast<const char*>(bytes), len))};
  });
}

rx_status rx_catalog_save_file(const rx_catalog* c, const char* path) {
  return run_status([&] {
    if (!c || !path) throw rcross::ParameterError("null argument");
    const auto blob = rcross::save_catalog(c->c);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw rcross::ParameterError(std::string("cannot write: ") + path);
    out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
    if (!out) throw rcross::ParameterError(std::string("short write: ") + path);
  });
}

rx_status rx_catalog_merge_into(rx_catalog* dst, const rx_catalog* src) {
  return run_status([&] {
    if (!dst || !src) throw rcross::ParameterError("null argument");
    dst->c = rcross::merge_catalogs(dst->c, src->c);
  });
}

char* rx_catalog_info_json(const rx_catalog* c, rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!c) throw rcross::ParameterError("null catalog");
    ordered_json j;
    j["n"] = c->c.n;
    j["entries"] = c->c.entries.size();
    j["source"] = c->c.meta.source;
    j["grid_side"] = c->c.meta.grid_side;
    j["exhaustive"] = c->c.meta.exhaustive;
    j["seed"] = c->c.meta.seed;
    j["tested"] = c->c.meta.tested;
    return dup_string(j.dump(2) + "\n");
  });
}

void rx_catalog_free(rx_catalog* c) { delete c; }

char* rx_draw_json(const rx_graph* g, const char* config_json,
                   rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!g) throw rcross::ParameterError("null graph");
    const auto& gr = need_unweighted(g, "draw");
    const auto cfg = config_from_json(config_json);
    const auto res = rcross::run_pipeline(gr, cfg);
    return dup_string(
        rcross::pipeline_result_json(res, timings_flag(config_json)));
  });
}

char* rx_draw_svg(const rx_graph* g, const char* config_json,
                  rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!g) throw rcross::ParameterError("null graph");
    const auto& gr = need_unweighted(g, "draw");
    const auto res = rcross::run_pipeline(gr, config_from_json(config_json));
    return dup_string(rcross::render_svg(res.drawing));
  });
}

char* rx_exact_json(const rx_graph* g, const rx_catalog* c, rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!g || !c) throw rcross::ParameterError("null argument");
    ordered_json j;
    if (std::holds_alternative<rcross::Graph>(g->g)) {
      const auto& gr = std::get<rcross::Graph>(g->g);
      const auto m = rcross::min_rectilinear_crossing(gr, c->c);
      j["n"] = gr.n;
      j["value"] = rational_str(rcross::Rational(m.value));
      j["point_of"] = m.point_of;
      j["points"] = placement_json(m.witness.placement);
    } else {
      const auto& gr = std::get<rcross::WeightedGraph>(g->g);
      const auto m = rcross::min_rectilinear_crossing(gr, c->c);
      j["n"] = gr.n;
      j["value"] = rational_str(m.value);
      j["point_of"] = m.point_of;
      j["points"] = placement_json(m.witness.placement);
    }
    j["catalog_entries"] = c->c.entries.size();
    j["catalog_exhaustive"] = c->c.meta.exhaustive;
    return dup_string(j.dump(2) + "\n");
  });
}

char* rx_count_json(const rx_graph* g, const char* points_text,
                    rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!g || !points_text) throw rcross::ParameterError("null argument");
    const auto pts = rcross::parse_configuration(points_text);
    ordered_json j;
    rcross::CrossingReport rep;
    if (std::holds_alternative<rcross::Graph>(g->g)) {
      rep = rcross::count_crossings(
          rcross::Drawing{std::get<rcross::Graph>(g->g), pts});
    } else {
      rep = rcross::count_crossings(
          rcross::WeightedDrawing{std::get<rcross::WeightedGraph>(g->g), pts});
    }
    j["value"] = rational_str(rep.value);
    auto pairs = ordered_json::array();
    for (const auto& q : rep.pairs)
      pairs.push_back(ordered_json::array({q[0], q[1], q[2], q[3]}));
    j["pairs"] = std::move(pairs);
    return dup_string(j.dump(2) + "\n");
  });
}

char* rx_render_svg(const rx_graph* g, const char* points_text,
                    rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!g || !points_text) throw rcross::ParameterError("null argument");
    const auto pts = rcross::parse_configuration(points_text);
    rcross::Graph gr;
    if (std::holds_alternative<rcross::Graph>(g->g)) {
      gr = std::get<rcross::Graph>(g->g);
    } else {
      // render the support of a weighted graph
      const auto& wg = std::get<rcross::WeightedGraph>(g->g);
      gr.n = wg.n;
      for (const auto& [uv, w] : wg.weights) gr.edges.push_back(uv);
    }
    return dup_string(rcross::render_svg(rcross::Drawing{gr, pts}));
  });
}

char* rx_partition_json(const rx_graph* g, const char* epsilon, int k_max,
                        int effort, uint64_t seed, rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!g) throw rcross::ParameterError("null graph");
    const auto& gr = need_unweighted(g, "partition");
    const auto eps = parse_required_rational(epsilon, "epsilon");
    const auto pr = rcross::weak_regular_partition(gr, eps, k_max, effort, seed);
    ordered_json j;
    j["n"] = pr.partition.n;
    j["K"] = pr.partition.K;
    j["partition"] = pr.partition.part;
    j["certificate"] =
        ordered_json::parse(rcross::certificate_json(pr.certificate));
    j["rounds"] = pr.certificate.rounds;
    j["cap_exceeded"] = pr.certificate.cap_exceeded;
    return dup_string(j.dump(2) + "\n");
  });
}

char* rx_cutdist_json(const rx_graph* a, const rx_graph* b, int exact_cap,
                      int effort, uint64_t seed, rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!a || !b) throw rcross::ParameterError("null argument");
    const auto wa = as_weighted(a), wb = as_weighted(b);
    ordered_json j;
    j["n"] = wa.n;
    if (wa.n <= exact_cap) {
      j["value"] = rational_str(rcross::cut_distance_exact(wa, wb, exact_cap));
      j["exact"] = true;
    } else {
      const auto w = rcross::cut_distance_lower_bound(wa, wb, effort, seed);
      j["value"] = rational_str(w.value);
      j["exact"] = false;
      j["witness_S"] = w.S;
      j["witness_T"] = w.T;
    }
    return dup_string(j.dump(2) + "\n");
  });
}

char* rx_kplanar_json(const rx_graph* g, int k, const rx_catalog* c,
                      long long coloring_cap, rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!g || !c) throw rcross::ParameterError("null argument");
    const auto& gr = need_unweighted(g, "k-colored search");
    const auto r = rcross::min_k_colored_crossing(gr, k, c->c, coloring_cap);
    ordered_json j;
    j["n"] = gr.n;
    j["k"] = k;
    j["value"] = r.value;
    auto edges = ordered_json::array();
    for (auto [u, v] : r.witness.graph.edges)
      edges.push_back(ordered_json::array({u, v}));
    j["edges"] = std::move(edges);
    j["colors"] = r.colors;
    j["points"] = placement_json(r.witness.placement);
    return dup_string(j.dump(2) + "\n");
  });
}

char* rx_estimate_json(const rx_graph* g, int t, int trials, uint64_t seed,
                       const rx_catalog* c, rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!g || !c) throw rcross::ParameterError("null argument");
    const auto& gr = need_unweighted(g, "estimate");
    const auto r = rcross::sample_estimate(gr, t, trials, seed, c->c);
    ordered_json j;
    j["n"] = gr.n;
    j["t"] = r.t;
    j["trials"] = trials;
    auto vals = ordered_json::array();
    for (const auto& v : r.trial_values) vals.push_back(rational_str(v));
    j["trial_values"] = std::move(vals);
    j["median"] = rational_str(r.median);
    return dup_string(j.dump(2) + "\n");
  });
}

char* rx_experiment_report(const char* spec_json, const char* format,
                           rx_status* status) {
  return guard(status, [&]() -> char* {
    if (!spec_json) throw rcross::ParameterError("null spec");
    ordered_json j;
    try {
      j = ordered_json::parse(spec_json);
    } catch (const std::exception& e) {
      throw rcross::ParseError(std::string("bad spec JSON: ") + e.what());
    }
    rcross::ExperimentSpec spec;
    if (!j.contains("family"))
      throw rcross::ParameterError("spec needs a family");
    spec.family = j["family"].get<std::string>();
    if (j.contains("n")) spec.n = j["n"].get<int>();
    if (j.contains("q")) spec.n = j["q"].get<int>();
    if (j.contains("p"))
      spec.p = rcross::parse_rational(j["p"].get<std::string>());
    if (j.contains("trials")) spec.trials = j["trials"].get<int>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("path")) spec.path = j["path"].get<std::string>();
    if (j.contains("timings")) spec.timings = j["timings"].get<bool>();
    spec.pipeline = config_from_json(spec_json);
    spec.pipeline.seed = 0;  // per-trial seeds derive from spec.seed

    const auto rep = rcross::quasirandom_experiment(spec);
    const std::string fmt = format ? format : "csv";
    if (fmt == "csv")
      return dup_string(rcross::experiment_csv(rep, spec.timings));
    if (fmt == "json")
      return dup_string(rcross::experiment_json(rep, spec.timings));
    throw rcross::ParameterError("format must be csv or json");
  });
}

}  // extern "C"
