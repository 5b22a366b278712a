#pragma once

#include <string>
#include <vector>

#include "catalog.hpp"
#include "graphs.hpp"
#include "pipeline.hpp"

namespace rcross {

struct EstimateResult {
  int t = 0;
  std::vector<Rational> trial_values;  // cr(H) * n^4 / t^4 per sampled subset
  Rational median;
};

// Samples random induced t-subsets, solves each exactly over the catalog,
// and scales the values up to the full vertex count.
EstimateResult sample_estimate(const Graph& g, int t, int trials,
                               std::uint64_t seed,
                               const OrderTypeCatalog& catalog);

struct ExperimentSpec {
  std::string family;  // gnp | paley | complete | file
  int n = 0;           // vertex count (the prime q for paley)
  Rational p = Rational(1, 2);
  int trials = 1;
  std::uint64_t seed = 0;
  std::string path;  // graph file for family=file
  PipelineConfig pipeline;
  bool timings = false;
};

struct ExperimentRow {
  std::string family;
  int n = 0;
  Rational p;
  int trial = 0;
  long long upper_bound = 0;
  long long normalizer = 0;  // pipeline upper bound for the complete graph
  Rational ratio;
  double seconds = 0;
  std::string error;  // nonempty when the trial failed
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
};

// Per trial: build the family graph, run the pipeline, and self-normalize
// the upper bound by the pipeline's own bound for the complete graph on the
// same vertex count.
ExperimentReport quasirandom_experiment(const ExperimentSpec& spec);

std::string experiment_csv(const ExperimentReport& rep, bool timings);
std::string experiment_json(const ExperimentReport& rep, bool timings);

}  // namespace rcross
