#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rational.hpp"

namespace rcross {

// Simple graph: 0-based vertices, unordered distinct pairs, no loops.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // each with first < second, sorted

  bool has_edge(int u, int v) const;
};

// Symmetric edge weights in [0,1]; absent pair means weight 0.
struct WeightedGraph {
  int n = 0;
  std::map<std::pair<int, int>, Rational> weights;  // keys first < second, value > 0

  Rational weight(int u, int v) const;
  void set_weight(int u, int v, const Rational& w);
};

using AnyGraph = std::variant<Graph, WeightedGraph>;

WeightedGraph to_weighted(const Graph& g);

// Normalizes and validates an edge list: sorts, rejects loops/duplicates/
// out-of-range endpoints.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Text format shared with the CLI: header "n m", then m lines "u v" or
// "u v w" with w a rational in [0,1]. Mixing weighted and unweighted
// lines is rejected.
AnyGraph parse_graph(const std::string& text);
AnyGraph parse_graph_file(const std::string& path);
std::string format_graph(const Graph& g);
std::string format_graph(const WeightedGraph& g);

Graph complete_graph(int n);

// Erdos–Renyi G(n,p) with an exact rational threshold against 64-bit
// uniform draws, so results are reproducible across platforms.
Graph gnp_graph(int n, const Rational& p, std::uint64_t seed);

// Paley graph on q vertices, q a prime congruent to 1 mod 4: u ~ v iff
// u - v is a nonzero quadratic residue.
Graph paley_graph(int q);

// Deterministic per-stream seed derivation (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace rcross
