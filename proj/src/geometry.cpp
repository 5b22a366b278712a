#include "geometry.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace rcross {

namespace {

constexpr int kMaxCanonN = 10;

// Integer fast path: denominators 1 and numerators below 2^61, so that
// coordinate differences and their __int128 products cannot overflow.
bool small_int(const Rational& r, long long& out) {
  if (denominator(r) != 1) return false;
  static const Int kLim = Int(1) << 61;
  const Int num = numerator(r);
  if (num >= kLim || num <= -kLim) return false;
  out = static_cast<long long>(num);
  return true;
}

int sign128(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Point strictly inside segment ab, given it already lies on line ab.
bool strictly_between(const ExactPoint& a, const ExactPoint& b,
                      const ExactPoint& p) {
  Rational dot = (p.x - a.x) * (p.x - b.x) + (p.y - a.y) * (p.y - b.y);
  return dot < 0;
}

}  // namespace

ExactPoint make_point(long long x, long long y) {
  return ExactPoint{Rational(x), Rational(y)};
}

int triple_rank(int n, int i, int j, int k) {
  long long r = 0;
  for (int a = 0; a < i; ++a)
    r += static_cast<long long>(n - 1 - a) * (n - 2 - a) / 2;
  for (int b = i + 1; b < j; ++b) r += n - 1 - b;
  r += k - j - 1;
  return static_cast<int>(r);
}

int orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  long long ax, ay, bx, by, cx, cy;
  if (small_int(a.x, ax) && small_int(a.y, ay) && small_int(b.x, bx) &&
      small_int(b.y, by) && small_int(c.x, cx) && small_int(c.y, cy)) {
    __int128 det = (static_cast<__int128>(bx) - ax) * (static_cast<__int128>(cy) - ay) -
                   (static_cast<__int128>(by) - ay) * (static_cast<__int128>(cx) - ax);
    return sign128(det);
  }
  return sign_of(orient_det(a, b, c));
}

Rational orient_det(const ExactPoint& a, const ExactPoint& b,
                    const ExactPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

OrderTypeSignature order_type(const Configuration& config) {
  const int n = static_cast<int>(config.size());
  OrderTypeSignature sig;
  sig.n = n;
  if (n < 3) return sig;
  sig.signs.reserve(static_cast<std::size_t>(choose3(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int s = orient(config[i], config[j], config[k]);
        if (s == 0)
          throw DegeneracyError("collinear triple (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) +
                                ")");
        sig.signs.push_back(static_cast<std::int8_t>(s));
      }
  return sig;
}

namespace {

// Branch-and-prune search for the lexicographic minimum over relabelings
// and reflection. The (0,1,m) entries of the candidate vector form its
// contiguous prefix, so after fixing the images of labels 0 and 1 the
// search orders the remaining labels by their prefix contribution and
// prunes against the incumbent; leaves always do a full compare.
class Canonicalizer {
 public:
  explicit Canonicalizer(const OrderTypeSignature& sig)
      : n_(sig.n), raw_(sig.signs) {
    rank3_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k)
          rank3_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k] =
              static_cast<std::int16_t>(triple_rank(n_, i, j, k));
  }

  OrderTypeSignature run() {
    best_ = raw_;  // identity relabeling, no flip: a member of the orbit
    perm_.assign(n_, -1);
    used_.assign(n_, 0);
    row_.assign(n_, 0);
    leaf_.assign(raw_.size(), 0);
    for (int flip : {1, -1})
      for (int p0 = 0; p0 < n_; ++p0)
        for (int p1 = 0; p1 < n_; ++p1) {
          if (p1 == p0) continue;
          perm_[0] = p0;
          perm_[1] = p1;
          used_[p0] = used_[p1] = 1;
          for (int v = 0; v < n_; ++v)
            if (!used_[v]) row_[v] = flip * signed_lookup(p0, p1, v);
          dfs(2, 0, flip);
          used_[p0] = used_[p1] = 0;
        }
    OrderTypeSignature out;
    out.n = n_;
    out.signs = best_;
    return out;
  }

 private:
  // Orientation of the old-label triple (a,b,c) in the given order:
  // sorting parity times the stored sign of the sorted triple.
  int signed_lookup(int a, int b, int c) const {
    int p = 1;
    if (a > b) { std::swap(a, b); p = -p; }
    if (b > c) { std::swap(b, c); p = -p; }
    if (a > b) { std::swap(a, b); p = -p; }
    return p * raw_[rank3_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c]];
  }

  // cmp: 0 = candidate prefix equals incumbent so far, -1 = strictly less.
  void dfs(int t, int cmp, int flip) {
    if (t == n_) {
      leaf_compare(flip);
      return;
    }
    const int pos = t - 2;
    for (int want = -1; want <= 1; want += 2) {
      if (cmp == 0 && want > best_[pos]) break;
      const int child = (cmp != 0) ? cmp : (want < best_[pos] ? -1 : 0);
      for (int v = 0; v < n_; ++v) {
        if (used_[v] || row_[v] != want) continue;
        used_[v] = 1;
        perm_[t] = v;
        dfs(t + 1, child, flip);
        used_[v] = 0;
      }
    }
  }

  void leaf_compare(int flip) {
    int idx = 0;
    int better = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k, ++idx) {
          int val = flip * signed_lookup(perm_[i], perm_[j], perm_[k]);
          if (better == 0) {
            if (val > best_[idx]) return;
            if (val < best_[idx]) better = -1;
          }
          leaf_[idx] = static_cast<std::int8_t>(val);
        }
    if (better == -1) best_ = leaf_;
  }

  int n_;
  std::vector<std::int8_t> raw_;
  std::vector<std::int16_t> rank3_;
  std::vector<std::int8_t> best_;
  std::vector<int> perm_;
  std::vector<char> used_;
  std::vector<int> row_;
  std::vector<std::int8_t> leaf_;
};

}  // namespace

OrderTypeSignature canonicalize(const OrderTypeSignature& sig) {
  if (sig.n < 3 || sig.n > kMaxCanonN)
    throw ParameterError("canonicalize supports 3 <= n <= 10, got n=" +
                         std::to_string(sig.n));
  if (static_cast<long long>(sig.signs.size()) != choose3(sig.n))
    throw ParameterError("signature length " + std::to_string(sig.signs.size()) +
                         " does not match C(n,3) for n=" + std::to_string(sig.n));
  for (std::int8_t s : sig.signs)
    if (s != 1 && s != -1)
      throw ParameterError("signature entries must be +1 or -1");
  return Canonicalizer(sig).run();
}

bool is_convex_position(const Configuration& config) {
  const int n = static_cast<int>(config.size());
  if (n < 3) return true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (config[i] == config[j])
        throw DegeneracyError("coincident points " + std::to_string(i) + "," +
                              std::to_string(j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(config[i], config[j], config[k]) == 0)
          throw DegeneracyError("collinear triple (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) +
                                ")");
  // A point is interior iff it lies strictly inside some triangle of others.
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < n; ++i) {
      if (i == t) continue;
      for (int j = i + 1; j < n; ++j) {
        if (j == t) continue;
        for (int k = j + 1; k < n; ++k) {
          if (k == t) continue;
          int s1 = orient(config[i], config[j], config[t]);
          int s2 = orient(config[j], config[k], config[t]);
          int s3 = orient(config[k], config[i], config[t]);
          if (s1 == s2 && s2 == s3) return false;
        }
      }
    }
  return true;
}

bool convex_position_4(const ExactPoint& a, const ExactPoint& b,
                       const ExactPoint& c, const ExactPoint& d) {
  return segments_cross(a, b, c, d) || segments_cross(a, c, b, d) ||
         segments_cross(a, d, b, c);
}

bool segments_cross(const ExactPoint& a, const ExactPoint& b,
                    const ExactPoint& c, const ExactPoint& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  if (o1 == 0 && o2 == 0) {
    // All four on one line: reject any overlap of positive length.
    Rational dx = b.x - a.x, dy = b.y - a.y;
    Rational lo1 = 0, hi1 = dx * dx + dy * dy;
    Rational tc = (c.x - a.x) * dx + (c.y - a.y) * dy;
    Rational td = (d.x - a.x) * dx + (d.y - a.y) * dy;
    Rational lo2 = std::min(tc, td), hi2 = std::max(tc, td);
    if (std::max(lo1, lo2) < std::min(hi1, hi2))
      throw DegeneracyError("collinear overlapping segments");
    return false;
  }
  if (o1 == 0) {
    if (strictly_between(a, b, c)) throw DegeneracyError("segment through a vertex");
    return false;
  }
  if (o2 == 0) {
    if (strictly_between(a, b, d)) throw DegeneracyError("segment through a vertex");
    return false;
  }
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o3 == 0) {
    if (strictly_between(c, d, a)) throw DegeneracyError("segment through a vertex");
    return false;
  }
  if (o4 == 0) {
    if (strictly_between(c, d, b)) throw DegeneracyError("segment through a vertex");
    return false;
  }
  return o1 != o2 && o3 != o4;
}

bool same_type_transversals(const std::array<Configuration, 4>& parts) {
  Configuration all;
  for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  const int total = static_cast<int>(all.size());
  for (int i = 0; i < total; ++i)
    for (int j = i + 1; j < total; ++j)
      if (all[i] == all[j]) throw DegeneracyError("parts share a point");
  for (int i = 0; i < total; ++i)
    for (int j = i + 1; j < total; ++j)
      for (int k = j + 1; k < total; ++k)
        if (orient(all[i], all[j], all[k]) == 0)
          throw DegeneracyError("union of parts has a collinear triple");
  for (const auto& part : parts)
    if (part.empty()) return true;  // no transversal exists

  std::array<int, 4> ref{};
  bool have = false;
  for (const auto& a : parts[0])
    for (const auto& b : parts[1])
      for (const auto& c : parts[2])
        for (const auto& d : parts[3]) {
          std::array<int, 4> sig = {orient(a, b, c), orient(a, b, d),
                                    orient(a, c, d), orient(b, c, d)};
          if (!have) {
            ref = sig;
            have = true;
          } else if (sig != ref) {
            return false;
          }
        }
  return true;
}

Rational min_point_line_distance(const Configuration& config) {
  const int n = static_cast<int>(config.size());
  if (n < 3) throw ParameterError("need at least 3 points");
  Rational best;
  bool have = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational dx = config[j].x - config[i].x;
      Rational dy = config[j].y - config[i].y;
      Rational len2 = dx * dx + dy * dy;
      if (len2 == 0) throw DegeneracyError("coincident points");
      for (int u = 0; u < n; ++u) {
        if (u == i || u == j) continue;
        Rational det = orient_det(config[i], config[j], config[u]);
        if (det == 0) throw DegeneracyError("point on a line through two others");
        Rational d2 = det * det / len2;
        if (!have || d2 < best) {
          best = d2;
          have = true;
        }
      }
    }
  return best;
}

Configuration parse_configuration(const std::string& text) {
  Configuration out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs)) continue;  // blank line
    if (!(ls >> ys))
      throw ParseError("line " + std::to_string(lineno) + ": expected two coordinates");
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    out.push_back(ExactPoint{parse_rational(xs), parse_rational(ys)});
  }
  return out;
}

std::string format_configuration(const Configuration& config) {
  std::string out;
  for (const auto& p : config) {
    out += format_rational(p.x);
    out += ' ';
    out += format_rational(p.y);
    out += '\n';
  }
  return out;
}

}  // namespace rcross
