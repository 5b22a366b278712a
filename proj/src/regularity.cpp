#include "regularity.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "errors.hpp"

namespace rcross {

void validate_partition(const EquitablePartition& p) {
  if (p.n < 1 || p.K < 1 || p.K > p.n)
    throw ParameterError("partition needs 1 <= K <= n");
  if (static_cast<int>(p.part.size()) != p.n)
    throw ParameterError("partition assignment length mismatch");
  std::vector<int> sz(p.K, 0);
  for (int v = 0; v < p.n; ++v) {
    if (p.part[v] < 0 || p.part[v] >= p.K)
      throw ParameterError("part index out of range at vertex " + std::to_string(v));
    ++sz[p.part[v]];
  }
  auto [mn, mx] = std::minmax_element(sz.begin(), sz.end());
  if (*mn == 0) throw ParameterError("empty part");
  if (*mx - *mn > 1) throw ParameterError("part sizes differ by more than one");
}

std::vector<int> part_sizes(const EquitablePartition& p) {
  std::vector<int> sz(p.K, 0);
  for (int v : p.part) ++sz[v];
  return sz;
}

EquitablePartition equitable_blocks(int n, int K) {
  if (K < 1 || K > n) throw ParameterError("equitable blocks need 1 <= K <= n");
  EquitablePartition p;
  p.n = n;
  p.K = K;
  p.part.resize(n);
  int base = n / K, extra = n % K, v = 0;
  for (int i = 0; i < K; ++i) {
    int take = base + (i < extra ? 1 : 0);
    while (take--) p.part[v++] = i;
  }
  return p;
}

std::string format_partition(const EquitablePartition& p) {
  std::string out;
  for (int v = 0; v < p.n; ++v) out += std::to_string(p.part[v]) + "\n";
  return out;
}

EquitablePartition parse_partition(const std::string& text) {
  EquitablePartition p;
  std::istringstream in(text);
  std::string line;
  int maxpart = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    int q;
    if (!(ls >> q)) {
      std::string probe;
      if (std::istringstream(line) >> probe)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected a part index");
      continue;  // blank line
    }
    p.part.push_back(q);
    maxpart = std::max(maxpart, q);
  }
  p.n = static_cast<int>(p.part.size());
  p.K = maxpart + 1;
  validate_partition(p);
  return p;
}

namespace {

// Deviation matrix with a scaled-int64 representation when the common
// denominator is small (the usual case), exact rationals otherwise.
struct DevMatrix {
  int n = 0;
  bool ints = false;
  Int D = 1;  // entry value = stored / D
  std::vector<long long> mi;
  std::vector<Rational> mr;

  static DevMatrix build(int n, const std::vector<std::vector<Rational>>& m) {
    DevMatrix d;
    d.n = n;
    Int lcm = 1;
    for (const auto& row : m)
      for (const auto& x : row) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    // row sums must stay far from int64 range: entries are in [-1,1] so the
    // scaled magnitudes are bounded by D, and sums by n^2 * D
    if (lcm * n * n <= (Int(1) << 60)) {
      d.ints = true;
      d.D = lcm;
      d.mi.resize(static_cast<std::size_t>(n) * n);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          d.mi[static_cast<std::size_t>(u) * n + v] =
              (numerator(m[u][v]) * (lcm / denominator(m[u][v])))
                  .convert_to<long long>();
    } else {
      d.D = 1;
      d.mr.resize(static_cast<std::size_t>(n) * n);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) d.mr[static_cast<std::size_t>(u) * n + v] = m[u][v];
    }
    return d;
  }
};

struct SweepOutcome {
  Rational value;          // absolute deviation
  std::vector<char> S, T;  // indicator vectors
};

template <class V, class At>
SweepOutcome exact_sweep_typed(int n, At at, const Int& D) {
  std::vector<V> colsum(n, V());
  std::uint64_t gray = 0;
  V best = V();
  std::uint64_t bestS = 0, bestT = 0;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int b = __builtin_ctzll(i);
    const std::uint64_t bit = 1ULL << b;
    gray ^= bit;
    if (gray & bit)
      for (int v = 0; v < n; ++v) colsum[v] += at(b, v);
    else
      for (int v = 0; v < n; ++v) colsum[v] -= at(b, v);
    V plus = V(), minus = V();
    std::uint64_t tp = 0, tm = 0;
    for (int v = 0; v < n; ++v) {
      if (colsum[v] > V()) {
        plus += colsum[v];
        tp |= 1ULL << v;
      } else if (colsum[v] < V()) {
        minus -= colsum[v];
        tm |= 1ULL << v;
      }
    }
    if (plus > best) {
      best = plus;
      bestS = gray;
      bestT = tp;
    }
    if (minus > best) {
      best = minus;
      bestS = gray;
      bestT = tm;
    }
  }
  SweepOutcome out;
  out.value = Rational(best) / Rational(D);
  out.S.assign(n, 0);
  out.T.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    if (bestS & (1ULL << v)) out.S[v] = 1;
    if (bestT & (1ULL << v)) out.T[v] = 1;
  }
  return out;
}

SweepOutcome exact_sweep(const DevMatrix& M) {
  if (M.ints)
    return exact_sweep_typed<long long>(
        M.n, [&](int u, int v) { return M.mi[static_cast<std::size_t>(u) * M.n + v]; },
        M.D);
  return exact_sweep_typed<Rational>(
      M.n, [&](int u, int v) { return M.mr[static_cast<std::size_t>(u) * M.n + v]; },
      M.D);
}

template <class V, class At>
SweepOutcome local_search_typed(int n, At at, const Int& D, int effort,
                                std::uint64_t seed) {
  V best = V();
  std::vector<char> bestS(n, 0), bestT(n, 0);
  std::vector<char> S(n), T(n);
  std::vector<V> sums(n);
  for (int r = 0; r < effort; ++r) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    for (int sign = 0; sign < 2; ++sign) {
      if (r == 0)
        std::fill(S.begin(), S.end(), 1);  // deterministic full-set start
      else
        for (int v = 0; v < n; ++v) S[v] = static_cast<char>(rng() & 1);
      V cur = V();
      for (int iter = 0; iter < 200; ++iter) {
        // optimal T for this S
        for (int v = 0; v < n; ++v) {
          sums[v] = V();
          for (int u = 0; u < n; ++u)
            if (S[u]) sums[v] += at(u, v);
        }
        for (int v = 0; v < n; ++v)
          T[v] = static_cast<char>(sign == 0 ? sums[v] > V() : sums[v] < V());
        // optimal S for this T
        for (int u = 0; u < n; ++u) {
          sums[u] = V();
          for (int v = 0; v < n; ++v)
            if (T[v]) sums[u] += at(u, v);
        }
        for (int u = 0; u < n; ++u)
          S[u] = static_cast<char>(sign == 0 ? sums[u] > V() : sums[u] < V());
        V val = V();
        for (int u = 0; u < n; ++u)
          if (S[u]) val += sums[u];
        if (sign == 1) val = -val;
        if (val > cur)
          cur = val;
        else
          break;
      }
      if (cur > best) {
        best = cur;
        // recompute the witness pair for the converged S
        for (int v = 0; v < n; ++v) {
          sums[v] = V();
          for (int u = 0; u < n; ++u)
            if (S[u]) sums[v] += at(u, v);
        }
        for (int v = 0; v < n; ++v)
          T[v] = static_cast<char>(sign == 0 ? sums[v] > V() : sums[v] < V());
        bestS = S;
        bestT = T;
      }
    }
  }
  SweepOutcome out;
  out.value = Rational(best) / Rational(D);
  out.S = bestS;
  out.T = bestT;
  return out;
}

SweepOutcome local_search(const DevMatrix& M, int effort, std::uint64_t seed) {
  if (M.ints)
    return local_search_typed<long long>(
        M.n, [&](int u, int v) { return M.mi[static_cast<std::size_t>(u) * M.n + v]; },
        M.D, effort, seed);
  return local_search_typed<Rational>(
      M.n, [&](int u, int v) { return M.mr[static_cast<std::size_t>(u) * M.n + v]; },
      M.D, effort, seed);
}

std::vector<std::vector<Rational>> weight_matrix(const WeightedGraph& g) {
  std::vector<std::vector<Rational>> m(g.n, std::vector<Rational>(g.n, Rational(0)));
  for (const auto& [uv, w] : g.weights) {
    m[uv.first][uv.second] = w;
    m[uv.second][uv.first] = w;
  }
  return m;
}

std::vector<int> indicator_to_list(const std::vector<char>& ind) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(ind.size()); ++v)
    if (ind[v]) out.push_back(v);
  return out;
}

}  // namespace

Rational cut_distance_exact(const WeightedGraph& a, const WeightedGraph& b,
                            int cap) {
  if (a.n != b.n) throw ParameterError("cut distance needs equal vertex sets");
  if (a.n > cap)
    throw ParameterError("n=" + std::to_string(a.n) +
                         " exceeds the exhaustive cap " + std::to_string(cap) +
                         "; use cut_distance_lower_bound");
  if (a.n < 1) throw ParameterError("empty graph");
  auto ma = weight_matrix(a), mb = weight_matrix(b);
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < a.n; ++v) ma[u][v] -= mb[u][v];
  return exact_sweep(DevMatrix::build(a.n, ma)).value;
}

CutWitness cut_distance_lower_bound(const WeightedGraph& a, const WeightedGraph& b,
                                    int effort, std::uint64_t seed) {
  if (a.n != b.n) throw ParameterError("cut distance needs equal vertex sets");
  if (a.n < 1) throw ParameterError("empty graph");
  if (effort < 1) throw ParameterError("effort must be positive");
  auto ma = weight_matrix(a), mb = weight_matrix(b);
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < a.n; ++v) ma[u][v] -= mb[u][v];
  auto out = local_search(DevMatrix::build(a.n, ma), effort, seed);
  return CutWitness{out.value, indicator_to_list(out.S), indicator_to_list(out.T)};
}

namespace {

// Ordered-pair counts e_G(V_i, V_j) for all part pairs, diagonal included
// (internal edges count twice).
std::vector<std::vector<long long>> pair_counts(const Graph& g,
                                                const EquitablePartition& p) {
  std::vector<std::vector<long long>> e(p.K, std::vector<long long>(p.K, 0));
  for (auto [u, v] : g.edges) {
    e[p.part[u]][p.part[v]]++;
    e[p.part[v]][p.part[u]]++;
  }
  return e;
}

// The FK model deviation matrix for graph vs partition averages:
// M(u,v) = A(u,v) - d(p(u),p(v)) off the diagonal, M(v,v) = -d(p(v),p(v))
// (the model's diagonal term has no graph counterpart).
std::vector<std::vector<Rational>> fk_deviation_matrix(
    const Graph& g, const EquitablePartition& p) {
  auto sz = part_sizes(p);
  auto e = pair_counts(g, p);
  std::vector<std::vector<Rational>> d(p.K, std::vector<Rational>(p.K));
  for (int i = 0; i < p.K; ++i)
    for (int j = 0; j < p.K; ++j)
      d[i][j] = Rational(e[i][j], static_cast<long long>(sz[i]) * sz[j]);
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
  std::vector<std::vector<Rational>> m(g.n, std::vector<Rational>(g.n));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      m[u][v] = (u == v ? Rational(0) : Rational(adj[u][v])) -
                d[p.part[u]][p.part[v]];
  return m;
}

// Moves vertices between parts until sizes are equitable. Donor vertices are
// the ones whose removal changes the donor's density profile least; ties go
// to the lowest vertex index. Receivers fill in part order.
void equalize(const Graph& g, EquitablePartition& p) {
  auto sz = part_sizes(p);
  const int base = p.n / p.K, extra = p.n % p.K;
  auto target = [&](int i) { return base + (i < extra ? 1 : 0); };

  auto e = pair_counts(g, p);
  std::vector<std::pair<Rational, int>> pool;  // (score, vertex)
  for (int i = 0; i < p.K; ++i) {
    int give = sz[i] - target(i);
    if (give <= 0) continue;
    std::vector<std::pair<Rational, int>> cands;
    for (int v = 0; v < p.n; ++v) {
      if (p.part[v] != i) continue;
      // how far v's neighbor profile sits from the part average
      std::vector<long long> ev(p.K, 0);
      for (auto [a, b] : g.edges) {
        if (a == v) ev[p.part[b]]++;
        if (b == v) ev[p.part[a]]++;
      }
      Rational score = 0;
      for (int j = 0; j < p.K; ++j) {
        Rational diff = Rational(ev[j]) - Rational(e[i][j], sz[i]);
        score += diff < 0 ? -diff : diff;
      }
      cands.emplace_back(score, v);
    }
    std::sort(cands.begin(), cands.end());
    for (int t = 0; t < give; ++t) pool.push_back(cands[t]);
  }
  std::size_t next = 0;
  for (int j = 0; j < p.K && next < pool.size(); ++j) {
    while (sz[j] < target(j) && next < pool.size()) {
      int v = pool[next++].second;
      sz[p.part[v]]--;
      p.part[v] = j;
      sz[j]++;
    }
  }
}

}  // namespace

PartitionResult weak_regular_partition(const Graph& g, const Rational& epsilon,
                                       int K_max, int effort, std::uint64_t seed) {
  if (g.n < 1) throw ParameterError("empty graph");
  if (epsilon <= 0 || epsilon >= 1)
    throw ParameterError("epsilon must lie in (0,1)");
  if (Rational(K_max) < 1 / epsilon)
    throw ParameterError("K_max must be at least 1/epsilon");

  // 8/eps^2 rounds, capped at a sane absolute bound
  Int rc = 8 * denominator(epsilon) * denominator(epsilon);
  rc = (rc + numerator(epsilon) * numerator(epsilon) - 1) /
       (numerator(epsilon) * numerator(epsilon));
  const int round_cap = static_cast<int>(std::min<Int>(rc, 10000).convert_to<long long>());

  EquitablePartition p;
  p.n = g.n;
  p.K = 1;
  p.part.assign(g.n, 0);

  RegularityCertificate cert;
  cert.epsilon = epsilon;
  const Rational threshold = epsilon * g.n * g.n;

  for (int round = 0;; ++round) {
    auto M = DevMatrix::build(g.n, fk_deviation_matrix(g, p));
    SweepOutcome found = g.n <= 16
                             ? exact_sweep(M)
                             : local_search(M, effort, mix_seed(seed, round));
    cert.K = p.K;
    cert.best_deviation = found.value;
    cert.witness_S = indicator_to_list(found.S);
    cert.witness_T = indicator_to_list(found.T);
    cert.verified_exact = g.n <= 16;
    cert.rounds = round;
    if (found.value < threshold) break;
    if (round >= round_cap) {
      cert.cap_exceeded = true;
      break;
    }
    // split every part along the S/T atoms of the violating pair
    std::map<std::tuple<int, bool, bool>, int> atom_index;
    std::vector<int> newpart(g.n);
    for (int v = 0; v < g.n; ++v) {
      auto key = std::make_tuple(p.part[v], found.S[v] != 0, found.T[v] != 0);
      auto [it, fresh] = atom_index.try_emplace(key, static_cast<int>(atom_index.size()));
      newpart[v] = it->second;
    }
    if (static_cast<int>(atom_index.size()) > K_max) {
      cert.cap_exceeded = true;
      break;
    }
    if (static_cast<int>(atom_index.size()) == p.K) {
      // the witness does not separate anything new; refining cannot help
      cert.cap_exceeded = true;
      break;
    }
    p.K = static_cast<int>(atom_index.size());
    p.part = std::move(newpart);
    equalize(g, p);
  }
  validate_partition(p);
  return PartitionResult{p, cert};
}

RegularityCertificate partition_certificate(const Graph& g,
                                            const EquitablePartition& p,
                                            const Rational& epsilon, int effort,
                                            std::uint64_t seed) {
  validate_partition(p);
  if (p.n != g.n) throw ParameterError("partition does not match graph");
  auto M = DevMatrix::build(g.n, fk_deviation_matrix(g, p));
  SweepOutcome found =
      g.n <= 16 ? exact_sweep(M) : local_search(M, effort, seed);
  RegularityCertificate cert;
  cert.epsilon = epsilon;
  cert.K = p.K;
  cert.best_deviation = found.value;
  cert.witness_S = indicator_to_list(found.S);
  cert.witness_T = indicator_to_list(found.T);
  cert.verified_exact = g.n <= 16;
  return cert;
}

ReducedGraph reduced_graph(const Graph& g, const EquitablePartition& p) {
  validate_partition(p);
  if (p.n != g.n) throw ParameterError("partition does not match graph");
  auto sz = part_sizes(p);
  auto e = pair_counts(g, p);
  ReducedGraph rg;
  rg.K = p.K;
  rg.w.assign(p.K, std::vector<Rational>(p.K, Rational(0)));
  for (int i = 0; i < p.K; ++i)
    for (int j = 0; j < p.K; ++j)
      if (i != j)
        rg.w[i][j] = Rational(e[i][j], static_cast<long long>(sz[i]) * sz[j]);
  return rg;
}

ReducedGraph reduced_graph(const WeightedGraph& g, const EquitablePartition& p) {
  validate_partition(p);
  if (p.n != g.n) throw ParameterError("partition does not match graph");
  auto sz = part_sizes(p);
  ReducedGraph rg;
  rg.K = p.K;
  rg.w.assign(p.K, std::vector<Rational>(p.K, Rational(0)));
  for (const auto& [uv, w] : g.weights) {
    int i = p.part[uv.first], j = p.part[uv.second];
    if (i == j) continue;
    rg.w[i][j] += w;
    rg.w[j][i] += w;
  }
  for (int i = 0; i < p.K; ++i)
    for (int j = 0; j < p.K; ++j)
      if (i != j) rg.w[i][j] /= static_cast<long long>(sz[i]) * sz[j];
  return rg;
}

WeightedGraph blow_up_weights(const ReducedGraph& rg, int m) {
  if (m < 1) throw ParameterError("multiplicity must be at least 1");
  if (rg.K < 1) throw ParameterError("empty reduced graph");
  WeightedGraph out;
  out.n = rg.K * m;
  for (int i = 0; i < rg.K; ++i)
    for (int j = i; j < rg.K; ++j) {
      if (i == j) continue;
      const Rational& w = rg.w[i][j];
      if (w == 0) continue;
      if (w < 0 || w > 1) throw ParameterError("reduced weight outside [0,1]");
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
          out.weights[{std::min(i * m + r, j * m + s),
                       std::max(i * m + r, j * m + s)}] = w;
    }
  return out;
}

Rational partition_energy(const Graph& g, const EquitablePartition& p) {
  validate_partition(p);
  auto sz = part_sizes(p);
  auto e = pair_counts(g, p);
  Rational total = 0;
  for (int i = 0; i < p.K; ++i)
    for (int j = 0; j < p.K; ++j) {
      Rational d(e[i][j], static_cast<long long>(sz[i]) * sz[j]);
      total += d * d * sz[i] * sz[j];
    }
  return total / (static_cast<long long>(g.n) * g.n);
}

}  // namespace rcross
