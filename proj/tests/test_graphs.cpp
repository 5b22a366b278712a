#include <set>
#include <string>

#include "doctest.h"
#include "errors.hpp"
#include "graphs.hpp"
#include "helpers.hpp"

using namespace rcross;

TEST_CASE("parse_graph reads an unweighted triangle") {
  const auto any = parse_graph("3 3\n0 1\n1 2\n0 2\n");
  REQUIRE(std::holds_alternative<Graph>(any));
  const auto& g = std::get<Graph>(any);
  CHECK(g.n == 3);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(3, 0));
}

TEST_CASE("parse_graph reads weights and drops zeros") {
  const auto any = parse_graph("4 3\n0 1 1/2\n2 3 0\n1 2 0.25\n");
  REQUIRE(std::holds_alternative<WeightedGraph>(any));
  const auto& g = std::get<WeightedGraph>(any);
  CHECK(g.n == 4);
  CHECK(g.weight(1, 0) == Rational(1, 2));
  CHECK(g.weight(1, 2) == Rational(1, 4));
  CHECK(g.weight(2, 3) == 0);  // explicit zero weight is not stored
  CHECK(g.weights.size() == 2);
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0\n"), "line 2: loop at vertex 0",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 1 3/2\n"),
                       "line 2: weight outside [0,1]", ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 2 1/2\n"), ParseError);  // mixed arity
  CHECK_THROWS_AS(parse_graph("3 3\n0 1\n1 2\n"), ParseError);  // count mismatch
  CHECK_THROWS_AS(parse_graph("3 1\n0 1\n1 2\n"), ParseError);  // too many lines
  CHECK_THROWS_AS(parse_graph("2 2\n0 1\n1 0\n"), ParameterError);  // duplicate
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 5\n"), ParseError);  // out of range
}

TEST_CASE("format_graph round trips both kinds") {
  std::mt19937_64 rng(41);
  const Graph g = rcross::testing::random_graph(9, rng);
  const auto back = parse_graph(format_graph(g));
  REQUIRE(std::holds_alternative<Graph>(back));
  CHECK(std::get<Graph>(back).n == g.n);
  CHECK(std::get<Graph>(back).edges == g.edges);

  WeightedGraph w;
  w.n = 5;
  w.set_weight(0, 3, Rational(2, 7));
  w.set_weight(4, 1, Rational(1));
  const auto wback = parse_graph(format_graph(w));
  REQUIRE(std::holds_alternative<WeightedGraph>(wback));
  CHECK(std::get<WeightedGraph>(wback).weights == w.weights);
}

TEST_CASE("weighted graph accessors enforce the contract") {
  WeightedGraph g;
  g.n = 4;
  CHECK_THROWS_AS(g.set_weight(2, 2, Rational(1, 2)), ParameterError);
  CHECK_THROWS_AS(g.set_weight(0, 1, Rational(3, 2)), ParameterError);
  g.set_weight(0, 1, Rational(1, 3));
  CHECK(g.weight(1, 0) == Rational(1, 3));
  CHECK(g.weight(2, 3) == 0);
  // setting a weight to zero erases the stored entry
  g.set_weight(0, 1, Rational(0));
  CHECK(g.weights.empty());
}

TEST_CASE("to_weighted is the 0/1 indicator") {
  const Graph g = make_graph(4, {{0, 1}, {2, 3}});
  const WeightedGraph w = to_weighted(g);
  CHECK(w.n == 4);
  CHECK(w.weight(0, 1) == 1);
  CHECK(w.weight(0, 2) == 0);
  CHECK(w.weights.size() == 2);
}

TEST_CASE("complete_graph") {
  const Graph k5 = complete_graph(5);
  CHECK(k5.edges.size() == 10);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(k5.has_edge(u, v));
  CHECK_THROWS_AS(complete_graph(0), ParameterError);
}

TEST_CASE("gnp_graph is deterministic and density-plausible") {
  const Graph a = gnp_graph(30, Rational(1, 2), 424242);
  const Graph b = gnp_graph(30, Rational(1, 2), 424242);
  CHECK(a.edges == b.edges);
  const Graph c = gnp_graph(30, Rational(1, 2), 424243);
  CHECK(a.edges != c.edges);
  // 435 pairs at p=1/2: allow a generous +-5 sigma band around 217.5
  CHECK(a.edges.size() > 160);
  CHECK(a.edges.size() < 275);
  // edge list is valid (sorted, in range) by construction via make_graph
  for (auto [u, v] : a.edges) {
    CHECK(u < v);
    CHECK(v < 30);
  }
  CHECK_THROWS_AS(gnp_graph(5, Rational(0), 1), ParameterError);
  CHECK_THROWS_AS(gnp_graph(5, Rational(1), 1), ParameterError);
  CHECK_THROWS_AS(gnp_graph(0, Rational(1, 2), 1), ParameterError);
}

TEST_CASE("gnp_graph respects the density parameter") {
  // p = 1/100 on 40 vertices (780 pairs): expect ~8 edges, far from p = 1/2
  const Graph sparse = gnp_graph(40, Rational(1, 100), 7);
  CHECK(sparse.edges.size() < 60);
}

TEST_CASE("paley_graph") {
  // q = 5: residues {1, 4}, the 5-cycle 0-1-2-3-4-0
  const Graph p5 = paley_graph(5);
  CHECK(p5.edges.size() == 5);
  for (int v = 0; v < 5; ++v) CHECK(p5.has_edge(v, (v + 1) % 5));

  // Paley graphs are (q-1)/2-regular and self-complementary in edge count
  const Graph p13 = paley_graph(13);
  CHECK(p13.edges.size() == 13 * 6 / 2);
  std::vector<int> deg(13, 0);
  for (auto [u, v] : p13.edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int d : deg) CHECK(d == 6);
  // 0 ~ v iff v is a QR mod 13: {1, 3, 4, 9, 10, 12}
  const std::set<int> qr = {1, 3, 4, 9, 10, 12};
  for (int v = 1; v < 13; ++v) CHECK(p13.has_edge(0, v) == (qr.count(v) > 0));

  CHECK_THROWS_AS(paley_graph(7), ParameterError);   // 7 = 3 mod 4
  CHECK_THROWS_AS(paley_graph(15), ParameterError);  // composite
  CHECK_THROWS_AS(paley_graph(1), ParameterError);
}

TEST_CASE("mix_seed separates streams") {
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
  CHECK(mix_seed(1, 2) != mix_seed(1, 3));
  CHECK(mix_seed(1, 2) != mix_seed(2, 2));
  // no collisions across a small grid of (seed, stream) pairs
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 50; ++s)
    for (std::uint64_t t = 0; t < 50; ++t) seen.insert(mix_seed(s, t));
  CHECK(seen.size() == 2500);
}
