#include "graphs.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace rcross {

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Rational WeightedGraph::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = weights.find({u, v});
  return it == weights.end() ? Rational(0) : it->second;
}

void WeightedGraph::set_weight(int u, int v, const Rational& w) {
  if (u == v) throw ParameterError("loop weight");
  if (w < 0 || w > 1) throw ParameterError("weight outside [0,1]");
  if (u > v) std::swap(u, v);
  if (w == 0)
    weights.erase({u, v});
  else
    weights[{u, v}] = w;
}

WeightedGraph to_weighted(const Graph& g) {
  WeightedGraph w;
  w.n = g.n;
  for (auto [u, v] : g.edges) w.weights[{u, v}] = 1;
  return w;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw ParameterError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParameterError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParameterError("duplicate edge");
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

AnyGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (!(ls >> n >> m)) {
      std::string probe;
      std::istringstream(line) >> probe;
      if (probe.empty()) continue;  // blank line before header
      throw fail("expected header 'n m'");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing tokens after header");
    break;
  }
  if (n < 0 || m < 0) throw ParseError("missing or malformed header 'n m'");
  if (n > 100000) throw ParseError("vertex count implausibly large");

  std::vector<std::pair<int, int>> plain;
  std::map<std::pair<int, int>, Rational> weighted;
  int arity = 0;  // 2 = "u v", 3 = "u v w"
  long long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string us, vs, ws, extra;
    if (!(ls >> us)) continue;  // blank
    if (!(ls >> vs)) throw fail("expected 'u v' or 'u v w'");
    bool has_w = static_cast<bool>(ls >> ws);
    if (ls >> extra) throw fail("trailing tokens");
    if (++seen > m) throw fail("more than m edge lines");

    long long u, v;
    try {
      u = std::stoll(us);
      v = std::stoll(vs);
    } catch (const std::exception&) {
      throw fail("bad vertex index");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex index out of range");
    if (u == v) throw fail("loop at vertex " + std::to_string(u));

    int want = has_w ? 3 : 2;
    if (arity == 0) arity = want;
    if (arity != want) throw fail("mixed weighted and unweighted edge lines");

    int a = static_cast<int>(std::min(u, v)), b = static_cast<int>(std::max(u, v));
    if (has_w) {
      Rational w;
      try {
        w = parse_rational(ws);
      } catch (const ParseError& e) {
        throw fail(e.what());
      }
      if (w < 0 || w > 1) throw fail("weight outside [0,1]");
      if (weighted.count({a, b})) throw fail("duplicate edge");
      weighted[{a, b}] = w;
    } else {
      plain.emplace_back(a, b);
    }
  }
  if (seen != m)
    throw ParseError("header promised " + std::to_string(m) + " edges, got " +
                     std::to_string(seen));

  if (arity == 3) {
    WeightedGraph g;
    g.n = static_cast<int>(n);
    for (auto& [uv, w] : weighted)
      if (w != 0) g.weights.emplace(uv, w);
    return g;
  }
  return make_graph(static_cast<int>(n), std::move(plain));
}

AnyGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot read graph file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
  for (auto [u, v] : g.edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string format_graph(const WeightedGraph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.weights.size()) + "\n";
  for (const auto& [uv, w] : g.weights)
    out += std::to_string(uv.first) + " " + std::to_string(uv.second) + " " +
           format_rational(w) + "\n";
  return out;
}

Graph complete_graph(int n) {
  if (n < 1) throw ParameterError("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

Graph gnp_graph(int n, const Rational& p, std::uint64_t seed) {
  if (n < 1) throw ParameterError("gnp needs n >= 1");
  if (p <= 0 || p >= 1) throw ParameterError("gnp density must be in (0,1)");
  // threshold = round(p * 2^64), clamped into [1, 2^64 - 1]; draw < threshold
  // keeps the edge
  const Int two64 = Int(1) << 64;
  Int t = (numerator(p) * two64 + denominator(p) / 2) / denominator(p);
  if (t >= two64) t = two64 - 1;
  if (t < 1) t = 1;
  std::uint64_t threshold = t.convert_to<std::uint64_t>();
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() < threshold) edges.emplace_back(u, v);
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

Graph paley_graph(int q) {
  if (!is_prime(q) || q % 4 != 1)
    throw ParameterError("paley parameter must be a prime congruent to 1 mod 4");
  std::set<int> residues;
  for (int k = 1; k <= (q - 1) / 2; ++k)
    residues.insert(static_cast<int>((static_cast<long long>(k) * k) % q));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (residues.count((v - u) % q)) edges.emplace_back(u, v);
  Graph g;
  g.n = q;
  g.edges = std::move(edges);
  return g;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace rcross
