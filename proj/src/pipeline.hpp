#pragma once

#include <memory>
#include <string>

#include "catalog.hpp"
#include "crossings.hpp"
#include "regularity.hpp"

namespace rcross {

// Where the small-instance catalog comes from: a saved file when path is set,
// otherwise grid enumeration (side 0 picks a size-based default).
struct CatalogSource {
  std::string path;
  int grid_side = 0;
  long long budget = 0;  // 0 = exhaustive
  std::uint64_t seed = 0;
};

enum class PartitionMode { Auto, Singleton };

struct PipelineConfig {
  Rational epsilon = Rational(1, 4);
  int K_max = 8;
  PartitionMode mode = PartitionMode::Auto;
  CatalogSource catalog;
  int effort = 40;  // violating-pair search restarts
  std::uint64_t seed = 0;
};

struct PipelineDiagnostics {
  RegularityCertificate certificate;
  bool lifted = false;  // partition widened to 3 parts for placement
  int place_retries = 0;
  std::size_t catalog_entries = 0;
  std::string catalog_desc;
  // partition, solve (reduce + catalog search), place, count
  std::array<double, 4> stage_seconds{};
};

struct PipelineResult {
  Drawing drawing;
  long long crossing_count = 0;
  EquitablePartition partition;
  ReducedGraph reduced;
  WeightedDrawing small_drawing;
  Rational small_value;
  PipelineDiagnostics diagnostics;
};

// Places the points of part i on a tiny rational-angle arc strictly inside
// the disk of squared radius d2/400 around center i, where d2 is the minimum
// squared point-line distance of the centers; retries a deterministic jitter
// schedule until the full set is in general position.
Configuration place_clusters(const Configuration& small,
                             const EquitablePartition& p, int n);

// Partition -> reduce -> exact small minimization over the catalog -> blown
// up straight-line drawing of g with its crossing count.
PipelineResult run_pipeline(const Graph& g, const PipelineConfig& cfg);

// Loads or builds (and caches in-process) the catalog for n-point sets.
std::shared_ptr<const OrderTypeCatalog> acquire_catalog(const CatalogSource& src,
                                                        int n);

std::string certificate_json(const RegularityCertificate& c);
std::string pipeline_result_json(const PipelineResult& r, bool with_timings);

}  // namespace rcross
