#include "crossings.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace rcross {

namespace {

void validate_placement(int n, const std::vector<std::pair<int, int>>& edges,
                        const Configuration& pts) {
  if (static_cast<int>(pts.size()) != n)
    throw ParameterError("placement size does not match vertex count");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j])
        throw DegeneracyError("vertices " + std::to_string(i) + " and " +
                              std::to_string(j) + " coincide");
  for (auto [u, v] : edges)
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (orient(pts[u], pts[v], pts[w]) == 0) {
        Rational dot = (pts[w].x - pts[u].x) * (pts[w].x - pts[v].x) +
                       (pts[w].y - pts[u].y) * (pts[w].y - pts[v].y);
        if (dot < 0)
          throw DegeneracyError("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") passes through vertex " +
                                std::to_string(w));
      }
    }
}

template <class WeightFn>
CrossingReport count_impl(int n, const std::vector<std::pair<int, int>>& edges,
                          const Configuration& pts, WeightFn&& weight) {
  validate_placement(n, edges, pts);
  CrossingReport rep;
  rep.value = 0;
  const int m = static_cast<int>(edges.size());
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      auto [u, v] = edges[e];
      auto [s, t] = edges[f];
      if (u == s || u == t || v == s || v == t) continue;
      if (segments_cross(pts[u], pts[v], pts[s], pts[t])) {
        rep.pairs.push_back({u, v, s, t});
        rep.value += weight(e) * weight(f);
      }
    }
  return rep;
}

}  // namespace

CrossingReport count_crossings(const Drawing& d) {
  return count_impl(d.graph.n, d.graph.edges, d.placement,
                    [](int) { return Rational(1); });
}

CrossingReport count_crossings(const WeightedDrawing& d) {
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> w;
  for (const auto& [uv, wt] : d.graph.weights) {
    edges.push_back(uv);
    w.push_back(wt);
  }
  return count_impl(d.graph.n, edges, d.placement,
                    [&](int e) { return w[e]; });
}

namespace {

// Point-pair machinery shared by the exact searches: pairs of an n-point
// configuration get dense indices (C(n,2) <= 45 for n <= 10, so crossing
// sets fit one 64-bit mask per pair).
struct PairTable {
  int n = 0;
  std::vector<std::vector<int>> index;           // index[a][b], a != b
  std::vector<std::uint64_t> cross_row;          // point-pairs crossing this pair

  PairTable(const Configuration& pts) : n(static_cast<int>(pts.size())) {
    index.assign(n, std::vector<int>(n, -1));
    int next = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        index[a][b] = index[b][a] = next++;
      }
    cross_row.assign(next, 0);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = a; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            if (c == a && d <= b) continue;
            if (c == a || c == b || d == a || d == b) continue;
            if (segments_cross(pts[a], pts[b], pts[c], pts[d])) {
              cross_row[index[a][b]] |= 1ULL << index[c][d];
              cross_row[index[c][d]] |= 1ULL << index[a][b];
            }
          }
  }
};

// Graph view for the assignment search, weights already mapped to the
// search's value type (long long when a common denominator fits, Rational
// otherwise).
template <class Value>
struct SearchGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Value> ew;
  std::vector<std::vector<std::pair<int, Value>>> adj;  // vertex -> (nbr, w)
  std::vector<int> order;                               // assignment order

  void finish() {
    adj.assign(n, {});
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      adj[u].emplace_back(v, ew[e]);
      adj[v].emplace_back(u, ew[e]);
    }
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return adj[a].size() > adj[b].size();
    });
  }
};

template <class Value>
class AssignmentSearch {
 public:
  AssignmentSearch(const SearchGraph<Value>& g) : g_(g) {}

  // Minimizes over assignments on this entry; updates best/assign in place
  // on strict improvement only, so the global tie-break is first-found in
  // catalog order.
  void run(const PairTable& table, bool& have, Value& best,
           std::vector<int>& best_assign, bool& improved_here) {
    table_ = &table;
    have_ = &have;
    best_ = &best;
    best_assign_ = &best_assign;
    improved_ = false;
    point_of_.assign(g_.n, -1);
    pair_weight_.assign(table.cross_row.size(), Value());
    used_ = 0;
    mat_ = 0;
    partial_ = Value();
    dfs(0);
    improved_here = improved_;
  }

 private:
  void dfs(int depth) {
    if (depth == g_.n) {
      // strictly better than the incumbent by construction of the pruning
      *best_ = partial_;
      *have_ = true;
      *best_assign_ = point_of_;
      improved_ = true;
      return;
    }
    const int v = g_.order[depth];
    for (int p = 0; p < g_.n; ++p) {
      if (used_ & (1ULL << p)) continue;
      Value added = Value();
      std::uint64_t newbits = 0;
      for (const auto& [u, w] : g_.adj[v]) {
        if (point_of_[u] < 0) continue;
        const int pr = table_->index[p][point_of_[u]];
        std::uint64_t hits = table_->cross_row[pr] & mat_;
        while (hits) {
          const int b = __builtin_ctzll(hits);
          hits &= hits - 1;
          added += pair_weight_[b] * w;
        }
        pair_weight_[pr] = w;
        newbits |= 1ULL << pr;
      }
      if (*have_ && partial_ + added >= *best_) continue;
      point_of_[v] = p;
      used_ |= 1ULL << p;
      mat_ |= newbits;
      partial_ += added;
      dfs(depth + 1);
      partial_ -= added;
      mat_ &= ~newbits;
      used_ &= ~(1ULL << p);
      point_of_[v] = -1;
    }
  }

  const SearchGraph<Value>& g_;
  const PairTable* table_ = nullptr;
  bool* have_ = nullptr;
  Value* best_ = nullptr;
  std::vector<int>* best_assign_ = nullptr;
  bool improved_ = false;
  std::vector<int> point_of_;
  std::vector<Value> pair_weight_;
  std::uint64_t used_ = 0, mat_ = 0;
  Value partial_;
};

template <class Value>
struct CatalogMinimum {
  Value value;
  std::vector<int> assign;
  Configuration points;
};

template <class Value>
CatalogMinimum<Value> minimize_over_catalog(SearchGraph<Value> g,
                                            const OrderTypeCatalog& cat) {
  if (cat.entries.empty()) throw ParameterError("catalog is empty");
  if (g.n != cat.n)
    throw ParameterError("graph has " + std::to_string(g.n) +
                         " vertices but catalog is for n=" + std::to_string(cat.n));
  g.finish();
  bool have = false;
  Value best = Value();
  std::vector<int> best_assign;
  const Configuration* best_pts = nullptr;
  AssignmentSearch<Value> search(g);
  for (const auto& [key, witness] : cat.entries) {
    PairTable table(witness);
    bool improved = false;
    search.run(table, have, best, best_assign, improved);
    if (improved) best_pts = &witness;
    if (have && best == Value()) break;  // 0 cannot be beaten
  }
  return {best, best_assign, *best_pts};
}

Configuration apply_assignment(const Configuration& pts,
                               const std::vector<int>& assign) {
  Configuration placement(assign.size());
  for (std::size_t v = 0; v < assign.size(); ++v) placement[v] = pts[assign[v]];
  return placement;
}

}  // namespace

MinCrossingResult min_rectilinear_crossing(const Graph& g,
                                           const OrderTypeCatalog& cat) {
  SearchGraph<long long> sg;
  sg.n = g.n;
  sg.edges = g.edges;
  sg.ew.assign(g.edges.size(), 1);
  auto m = minimize_over_catalog(std::move(sg), cat);
  MinCrossingResult res;
  res.value = m.value;
  res.witness = Drawing{g, apply_assignment(m.points, m.assign)};
  res.point_of = m.assign;
  return res;
}

WeightedMinCrossingResult min_rectilinear_crossing(const WeightedGraph& g,
                                                   const OrderTypeCatalog& cat) {
  // Small common denominator -> exact integer search; otherwise rationals.
  Int lcm = 1;
  for (const auto& [uv, w] : g.weights)
    lcm = boost::multiprecision::lcm(lcm, denominator(w));
  WeightedMinCrossingResult res;
  if (lcm <= (Int(1) << 20)) {
    const long long L = lcm.convert_to<long long>();
    SearchGraph<long long> sg;
    sg.n = g.n;
    for (const auto& [uv, w] : g.weights) {
      sg.edges.push_back(uv);
      sg.ew.push_back(
          (numerator(w) * (L / denominator(w).convert_to<long long>()))
              .convert_to<long long>());
    }
    auto m = minimize_over_catalog(std::move(sg), cat);
    res.value = Rational(Int(m.value), Int(L) * L);
    res.witness = WeightedDrawing{g, apply_assignment(m.points, m.assign)};
    res.point_of = m.assign;
    return res;
  }
  SearchGraph<Rational> sg;
  sg.n = g.n;
  for (const auto& [uv, w] : g.weights) {
    sg.edges.push_back(uv);
    sg.ew.push_back(w);
  }
  auto m = minimize_over_catalog(std::move(sg), cat);
  res.value = m.value;
  res.witness = WeightedDrawing{g, apply_assignment(m.points, m.assign)};
  res.point_of = m.assign;
  return res;
}

namespace {

// Same-color crossing minimization for one placement: restricted-growth
// coloring enumeration (first edge gets color 0, each next edge at most one
// fresh color) over the conflict graph of crossing edges. Returns the
// minimum monochromatic pair count and one optimal coloring.
class ColorSearch {
 public:
  ColorSearch(const std::vector<std::uint64_t>& conflict_adj, int k)
      : adj_(conflict_adj), k_(k), m_(static_cast<int>(conflict_adj.size())) {
    // densest conflict edges first for earlier pruning
    order_.resize(m_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return __builtin_popcountll(adj_[a]) > __builtin_popcountll(adj_[b]);
    });
  }

  long long run(std::vector<int>& colors_out) {
    best_ = -1;
    mask_.assign(static_cast<std::size_t>(k_), 0);
    chosen_.assign(m_, 0);
    rec(0, 0, 0);
    colors_out = best_colors_;
    return best_;
  }

 private:
  void rec(int e, int used, long long mono) {
    if (best_ >= 0 && mono >= best_) return;
    if (e == m_) {
      best_ = mono;
      best_colors_.assign(m_, 0);
      for (int i = 0; i < m_; ++i) best_colors_[order_[i]] = chosen_[i];
      return;
    }
    const int idx = order_[e];
    const int limit = std::min(k_ - 1, used);
    for (int c = 0; c <= limit && best_ != 0; ++c) {
      long long add = __builtin_popcountll(adj_[idx] & mask_[c]);
      mask_[c] |= 1ULL << idx;
      chosen_[e] = c;
      rec(e + 1, std::max(used, c + 1), mono + add);
      mask_[c] &= ~(1ULL << idx);
    }
  }

  const std::vector<std::uint64_t>& adj_;
  int k_;
  int m_;
  std::vector<int> order_;
  long long best_ = -1;
  std::vector<std::uint64_t> mask_;
  std::vector<int> chosen_;
  std::vector<int> best_colors_;
};

}  // namespace

KColoredResult min_k_colored_crossing(const Graph& g, int k,
                                      const OrderTypeCatalog& cat,
                                      long long coloring_cap) {
  if (k < 1) throw ParameterError("k must be at least 1");
  if (cat.entries.empty()) throw ParameterError("catalog is empty");
  if (g.n != cat.n)
    throw ParameterError("graph/catalog size mismatch");
  const int m = static_cast<int>(g.edges.size());
  // k^m against the cap, saturating
  long long combos = 1;
  for (int e = 0; e < m && combos <= coloring_cap; ++e) {
    if (combos > coloring_cap / std::max(1, k)) {
      combos = coloring_cap + 1;
      break;
    }
    combos *= k;
  }
  if (combos > coloring_cap)
    throw BudgetError("k^m = " + std::to_string(k) + "^" + std::to_string(m) +
                      " colorings exceed the cap of " +
                      std::to_string(coloring_cap));

  long long best = -1;
  Configuration best_pts;
  std::vector<int> best_assign;
  std::vector<int> best_colors;

  std::vector<int> perm(g.n);
  for (const auto& [key, witness] : cat.entries) {
    PairTable table(witness);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // crossing pairs of edges under this assignment
      std::vector<std::pair<int, int>> crossing;
      for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
          auto [u, v] = g.edges[e];
          auto [s, t] = g.edges[f];
          if (u == s || u == t || v == s || v == t) continue;
          const int pe = table.index[perm[u]][perm[v]];
          const int pf = table.index[perm[s]][perm[t]];
          if (table.cross_row[pe] & (1ULL << pf)) crossing.emplace_back(e, f);
        }
      if (crossing.empty()) {
        KColoredResult res;
        res.value = 0;
        res.witness = Drawing{g, apply_assignment(witness, perm)};
        res.colors.assign(m, 0);
        return res;
      }
      // restrict the coloring search to edges in some crossing
      std::vector<int> involved;
      std::vector<int> local(m, -1);
      for (auto [e, f] : crossing) {
        if (local[e] < 0) {
          local[e] = static_cast<int>(involved.size());
          involved.push_back(e);
        }
        if (local[f] < 0) {
          local[f] = static_cast<int>(involved.size());
          involved.push_back(f);
        }
      }
      if (involved.size() > 64) continue;  // cannot happen for n <= 10
      std::vector<std::uint64_t> conflict(involved.size(), 0);
      for (auto [e, f] : crossing) {
        conflict[local[e]] |= 1ULL << local[f];
        conflict[local[f]] |= 1ULL << local[e];
      }
      std::vector<int> cols;
      long long val = ColorSearch(conflict, k).run(cols);
      if (best < 0 || val < best) {
        best = val;
        best_pts = witness;
        best_assign = perm;
        best_colors.assign(m, 0);
        for (std::size_t i = 0; i < involved.size(); ++i)
          best_colors[involved[i]] = cols[i];
        if (best == 0) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best == 0) break;
  }

  KColoredResult res;
  res.value = best;
  res.witness = Drawing{g, apply_assignment(best_pts, best_assign)};
  res.colors = best_colors;
  return res;
}

}  // namespace rcross
