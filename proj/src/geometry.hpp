#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rcross {

struct ExactPoint {
  Rational x;
  Rational y;
  bool operator==(const ExactPoint& o) const { return x == o.x && y == o.y; }
};

ExactPoint make_point(long long x, long long y);

// Ordered point sequence; general position is a precondition of most
// operations, not an invariant enforced at construction.
using Configuration = std::vector<ExactPoint>;

// Sign vector over all 3-subsets in lexicographic order of (i < j < k).
struct OrderTypeSignature {
  int n = 0;
  std::vector<std::int8_t> signs;  // entries are -1 or +1

  bool operator==(const OrderTypeSignature& o) const {
    return n == o.n && signs == o.signs;
  }
  bool operator<(const OrderTypeSignature& o) const {
    if (n != o.n) return n < o.n;
    return signs < o.signs;  // int8 order puts -1 before +1
  }
};

// Number of 3-subsets of an n-set.
inline long long choose3(int n) {
  return static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
}

// Lexicographic rank of the triple i < j < k among 3-subsets of [0, n).
int triple_rank(int n, int i, int j, int k);

// Sign of det [[1,1,1],[ax,bx,cx],[ay,by,cy]]: +1 for counterclockwise,
// -1 for clockwise, 0 for collinear. Exact; integer fast path when all
// coordinates are modest integers, rational arithmetic otherwise.
int orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

// The determinant itself (twice the signed triangle area), exact.
Rational orient_det(const ExactPoint& a, const ExactPoint& b,
                    const ExactPoint& c);

// Raw signature: signs[rank(i,j,k)] = orient(p_i, p_j, p_k).
// Throws DegeneracyError on any collinear triple.
OrderTypeSignature order_type(const Configuration& config);

// Lexicographically smallest sign vector over all n! relabelings and the
// global sign flip (mirror reflection). Branch-and-prune; n <= 10.
OrderTypeSignature canonicalize(const OrderTypeSignature& sig);

// True iff every point is a vertex of the convex hull. Validates general
// position first and throws DegeneracyError on violations.
bool is_convex_position(const Configuration& config);

// Convex-position test specialized to 4 points in general position:
// true iff one of the three opposite-segment pairings crosses.
bool convex_position_4(const ExactPoint& a, const ExactPoint& b,
                       const ExactPoint& c, const ExactPoint& d);

// Proper crossing of the open segments ab and cd (no shared endpoints
// expected). Throws DegeneracyError when a segment passes through an
// endpoint of the other or the segments overlap collinearly.
bool segments_cross(const ExactPoint& a, const ExactPoint& b,
                    const ExactPoint& c, const ExactPoint& d);

// True iff every transversal (one point per part, in part order) has the
// same order type. Validates that the union is in general position.
bool same_type_transversals(const std::array<Configuration, 4>& parts);

// Minimum over (point u, line through two other points) of the SQUARED
// distance from u to the line. Squared keeps the value rational.
Rational min_point_line_distance(const Configuration& config);

// One point per line, coordinates as "p/q" or plain integers.
Configuration parse_configuration(const std::string& text);
std::string format_configuration(const Configuration& config);

}  // namespace rcross
