#pragma once

#include <random>
#include <vector>

#include "geometry.hpp"
#include "graphs.hpp"

namespace rcross::testing {

// Random integer-coordinate configuration in general position, by rejection.
inline Configuration random_gp_config(int n, std::mt19937_64& rng,
                                      long long span = 1 << 20) {
  for (;;) {
    Configuration pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(make_point(static_cast<long long>(rng() % (2 * span)) - span,
                               static_cast<long long>(rng() % (2 * span)) - span));
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        for (int c = b + 1; c < n && ok; ++c)
          if (orient(pts[a], pts[b], pts[c]) == 0) ok = false;
    if (ok) return pts;
  }
}

inline Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

// n points on the parabola y = x^2: convex position and general position.
inline Configuration parabola_config(int n) {
  Configuration pts;
  for (int i = 0; i < n; ++i)
    pts.push_back(make_point(i, static_cast<long long>(i) * i));
  return pts;
}

}  // namespace rcross::testing
