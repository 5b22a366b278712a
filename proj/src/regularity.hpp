#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphs.hpp"

namespace rcross {

// Vertex partition with part sizes differing by at most one.
struct EquitablePartition {
  int n = 0;
  int K = 0;
  std::vector<int> part;  // vertex -> part index in [0, K)
};

void validate_partition(const EquitablePartition& p);
std::vector<int> part_sizes(const EquitablePartition& p);

// Consecutive blocks, the first n mod K parts one vertex larger.
EquitablePartition equitable_blocks(int n, int K);

// Text form: line i holds the part index of vertex i.
std::string format_partition(const EquitablePartition& p);
EquitablePartition parse_partition(const std::string& text);

// Weighted graph on parts; zero diagonal.
struct ReducedGraph {
  int K = 0;
  std::vector<std::vector<Rational>> w;
};

// Exact max over all (S,T) of |e_A(S,T) - e_B(S,T)| where e counts ordered
// pairs (edges inside S cap T twice). O(2^n * n) sweep; n capped.
Rational cut_distance_exact(const WeightedGraph& a, const WeightedGraph& b,
                            int cap = 16);

struct CutWitness {
  Rational value;
  std::vector<int> S, T;
};

// Alternating per-vertex local search with seeded restarts; always a valid
// lower bound, with the realizing (S,T).
CutWitness cut_distance_lower_bound(const WeightedGraph& a,
                                    const WeightedGraph& b, int effort,
                                    std::uint64_t seed = 0);

struct RegularityCertificate {
  Rational epsilon;
  int K = 0;
  Rational best_deviation;  // largest |e_G(S,T) - model(S,T)| found at the end
  std::vector<int> witness_S, witness_T;
  bool verified_exact = false;  // deviation is the true maximum (n <= 16)
  bool cap_exceeded = false;    // stopped on K_max or the round cap
  int rounds = 0;
};

struct PartitionResult {
  EquitablePartition partition;
  RegularityCertificate certificate;
};

// Frieze-Kannan refinement: split parts along violating (S,T) atoms,
// re-equalize with minimal moves, stop when the found deviation drops below
// epsilon * n^2 or a cap bites. The violating-pair search is exact for
// n <= 16, heuristic local search otherwise.
PartitionResult weak_regular_partition(const Graph& g, const Rational& epsilon,
                                       int K_max, int effort = 40,
                                       std::uint64_t seed = 0);

// Deviation certificate for a fixed partition: the largest cut discrepancy
// between g and its partition-average model the search can find (exact for
// n <= 16, heuristic otherwise). rounds stays 0.
RegularityCertificate partition_certificate(const Graph& g,
                                            const EquitablePartition& p,
                                            const Rational& epsilon,
                                            int effort = 40,
                                            std::uint64_t seed = 0);

// Between-part densities e_G(V_i,V_j)/(|V_i||V_j|), zero diagonal.
ReducedGraph reduced_graph(const Graph& g, const EquitablePartition& p);
ReducedGraph reduced_graph(const WeightedGraph& g, const EquitablePartition& p);

// m clones per part in consecutive blocks; weight w(i,j) between the blocks
// of i and j, zero inside a block.
WeightedGraph blow_up_weights(const ReducedGraph& rg, int m);

// Mean-square between-part density (the FK energy); nondecreasing under
// refinement, used by tests.
Rational partition_energy(const Graph& g, const EquitablePartition& p);

}  // namespace rcross
