#pragma once

#include <array>
#include <vector>

#include "catalog.hpp"
#include "geometry.hpp"
#include "graphs.hpp"

namespace rcross {

struct Drawing {
  Graph graph;
  Configuration placement;  // placement[v] = position of vertex v
};

struct WeightedDrawing {
  WeightedGraph graph;
  Configuration placement;
};

struct CrossingReport {
  Rational value;                         // = pairs.size() when unweighted
  std::vector<std::array<int, 4>> pairs;  // (u,v,s,t): edge (u,v) x edge (s,t)

  long long count() const { return static_cast<long long>(pairs.size()); }
};

// Counts unordered pairs of edges whose open segments intersect; edges
// sharing an endpoint never cross. Weighted drawings sum the products of the
// two edge weights instead. Throws DegeneracyError when an edge passes
// through a third vertex, two edges overlap collinearly, or two vertices
// coincide.
CrossingReport count_crossings(const Drawing& d);
CrossingReport count_crossings(const WeightedDrawing& d);

struct MinCrossingResult {
  long long value = 0;
  Drawing witness;
  std::vector<int> point_of;  // vertex -> index into the witness configuration
};

struct WeightedMinCrossingResult {
  Rational value;
  WeightedDrawing witness;
  std::vector<int> point_of;
};

// Exact minimum crossing value over every catalog entry and every
// vertex-to-point assignment (branch-and-bound inside each entry). This is
// the true rectilinear crossing number when the catalog is complete for n.
// Ties are broken by the first optimum in catalog order.
MinCrossingResult min_rectilinear_crossing(const Graph& g,
                                           const OrderTypeCatalog& cat);
WeightedMinCrossingResult min_rectilinear_crossing(const WeightedGraph& g,
                                                   const OrderTypeCatalog& cat);

struct KColoredResult {
  long long value = 0;
  Drawing witness;
  std::vector<int> colors;  // parallel to witness.graph.edges
};

// Minimum number of same-color crossing pairs over catalog placements and
// k-edge-colorings (restricted-growth enumeration kills color symmetry;
// only edges involved in some crossing are actually colored). Throws
// BudgetError when k^|E| exceeds coloring_cap.
KColoredResult min_k_colored_crossing(const Graph& g, int k,
                                      const OrderTypeCatalog& cat,
                                      long long coloring_cap = 100000000);

}  // namespace rcross
