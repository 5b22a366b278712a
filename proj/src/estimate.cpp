#include "estimate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "crossings.hpp"
#include "errors.hpp"
#include "json.hpp"

namespace rcross {

namespace {

// Floyd's algorithm: a uniform t-subset of {0..n-1}, deterministic per rng.
std::vector<int> sample_subset(int n, int t, std::mt19937_64& rng) {
  std::vector<char> in(n, 0);
  std::vector<int> out;
  for (int j = n - t; j < n; ++j) {
    int x = static_cast<int>(rng() % (j + 1));
    if (in[x]) x = j;
    in[x] = 1;
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) pos[verts[i]] = i;
  Graph h;
  h.n = static_cast<int>(verts.size());
  for (auto [u, v] : g.edges)
    if (pos[u] >= 0 && pos[v] >= 0)
      h.edges.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

}  // namespace

EstimateResult sample_estimate(const Graph& g, int t, int trials,
                               std::uint64_t seed,
                               const OrderTypeCatalog& catalog) {
  if (t < 4 || t > g.n) throw ParameterError("sample size must satisfy 4 <= t <= n");
  if (trials < 1) throw ParameterError("trials must be positive");
  if (catalog.n != t)
    throw ParameterError("catalog holds " + std::to_string(catalog.n) +
                         "-point sets but t=" + std::to_string(t));

  const Rational scale(Int(g.n) * g.n * g.n * g.n, Int(t) * t * t * t);
  EstimateResult res;
  res.t = t;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(mix_seed(seed, trial));
    const auto verts = sample_subset(g.n, t, rng);
    const auto h = induced_subgraph(g, verts);
    const auto m = min_rectilinear_crossing(h, catalog);
    res.trial_values.push_back(Rational(m.value) * scale);
  }
  auto sorted = res.trial_values;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();
  res.median = k % 2 ? sorted[k / 2]
                     : (sorted[k / 2 - 1] + sorted[k / 2]) / 2;
  return res;
}

namespace {

Graph family_graph(const ExperimentSpec& spec, int trial) {
  if (spec.family == "gnp")
    return gnp_graph(spec.n, spec.p, mix_seed(spec.seed, 1000 + trial));
  if (spec.family == "paley") return paley_graph(spec.n);
  if (spec.family == "complete") return complete_graph(spec.n);
  if (spec.family == "file") {
    auto any = parse_graph_file(spec.path);
    if (std::holds_alternative<Graph>(any)) return std::get<Graph>(any);
    throw ParameterError("experiment needs an unweighted graph file");
  }
  throw ParameterError("unknown family: " + spec.family);
}

std::string fixed3(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

ExperimentReport quasirandom_experiment(const ExperimentSpec& spec) {
  ExperimentSpec s = spec;
  if (s.family == "gnp") {
    if (s.p <= 0 || s.p >= 1)
      throw ParameterError("gnp density must lie strictly in (0,1)");
  } else if (s.family == "paley") {
    s.p = Rational(1, 2);
  } else if (s.family == "complete") {
    s.p = 1;
  } else if (s.family == "file") {
    auto any = parse_graph_file(s.path);
    if (!std::holds_alternative<Graph>(any))
      throw ParameterError("experiment needs an unweighted graph file");
    s.n = std::get<Graph>(any).n;
    s.p = 1;
  } else {
    throw ParameterError("unknown family: " + s.family);
  }
  if (s.trials < 1) throw ParameterError("trials must be positive");
  if (s.n < 3) throw ParameterError("experiment needs at least 3 vertices");

  // self-normalizer: the pipeline's own bound for the complete graph
  PipelineConfig base = s.pipeline;
  base.seed = mix_seed(s.seed, 0xC0);
  const auto complete_run = run_pipeline(complete_graph(s.n), base);
  const long long normalizer = complete_run.crossing_count;

  ExperimentReport rep;
  for (int trial = 0; trial < s.trials; ++trial) {
    ExperimentRow row;
    row.family = s.family;
    row.n = s.n;
    row.p = s.p;
    row.trial = trial;
    row.normalizer = normalizer;
    const auto start = std::chrono::steady_clock::now();
    try {
      PipelineConfig cfg = s.pipeline;
      cfg.seed = mix_seed(s.seed, 2000 + trial);
      const auto result = run_pipeline(family_graph(s, trial), cfg);
      row.upper_bound = result.crossing_count;
      row.ratio = normalizer > 0 ? Rational(row.upper_bound, normalizer)
                                 : Rational(0);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string experiment_csv(const ExperimentReport& rep, bool timings) {
  std::ostringstream out;
  out << "family,n,p,trial,upper_bound,normalizer,ratio,seconds\n";
  for (const auto& r : rep.rows) {
    out << r.family << "," << r.n << "," << format_rational(r.p) << ","
        << r.trial << ",";
    if (r.error.empty())
      out << r.upper_bound << "," << r.normalizer << ","
          << decimal_fixed(r.ratio, 6);
    else
      out << ",,";
    out << "," << (timings ? fixed3(r.seconds) : "0.000") << "\n";
  }
  return out.str();
}

std::string experiment_json(const ExperimentReport& rep, bool timings) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : rep.rows) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["p"] = format_rational(r.p);
    j["trial"] = r.trial;
    if (r.error.empty()) {
      j["upper_bound"] = r.upper_bound;
      j["normalizer"] = r.normalizer;
      j["ratio"] = decimal_fixed(r.ratio, 6);
    } else {
      j["error"] = r.error;
    }
    j["seconds"] = timings ? fixed3(r.seconds) : "0.000";
    rows.push_back(std::move(j));
  }
  return rows.dump(2) + "\n";
}

}  // namespace rcross
