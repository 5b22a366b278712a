#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "errors.hpp"

namespace rcross {

namespace {

constexpr double kWidth = 800, kHeight = 600, kMargin = 40;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Intersection of segments ab and cd known to cross properly.
std::pair<Rational, Rational> crossing_point(const ExactPoint& a,
                                             const ExactPoint& b,
                                             const ExactPoint& c,
                                             const ExactPoint& d) {
  const Rational rx = b.x - a.x, ry = b.y - a.y;
  const Rational sx = d.x - c.x, sy = d.y - c.y;
  const Rational denom = rx * sy - ry * sx;
  const Rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
  return {a.x + t * rx, a.y + t * ry};
}

}  // namespace

std::string render_svg(const Drawing& d) {
  const auto report = count_crossings(d);  // also validates the placement
  const int n = d.graph.n;

  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  for (int v = 0; v < n; ++v) {
    const double x = d.placement[v].x.convert_to<double>();
    const double y = d.placement[v].y.convert_to<double>();
    if (v == 0) {
      minx = maxx = x;
      miny = maxy = y;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
  const double spanx = std::max(maxx - minx, 1e-9);
  const double spany = std::max(maxy - miny, 1e-9);
  const double scale =
      std::min((kWidth - 2 * kMargin) / spanx, (kHeight - 2 * kMargin) / spany);
  auto sx = [&](double x) { return kMargin + (x - minx) * scale; };
  // flip y so the drawing keeps its mathematical orientation
  auto sy = [&](double y) { return kHeight - kMargin - (y - miny) * scale; };
  auto px = [&](const Rational& r) { return sx(r.convert_to<double>()); };
  auto py = [&](const Rational& r) { return sy(r.convert_to<double>()); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth
      << " " << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (auto [u, v] : d.graph.edges)
    out << "<line x1=\"" << num(px(d.placement[u].x)) << "\" y1=\""
        << num(py(d.placement[u].y)) << "\" x2=\"" << num(px(d.placement[v].x))
        << "\" y2=\"" << num(py(d.placement[v].y))
        << "\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
  for (const auto& q : report.pairs) {
    auto [cx, cy] = crossing_point(d.placement[q[0]], d.placement[q[1]],
                                   d.placement[q[2]], d.placement[q[3]]);
    out << "<circle cx=\"" << num(px(cx)) << "\" cy=\"" << num(py(cy))
        << "\" r=\"5\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" "
           "class=\"crossing\"/>\n";
  }
  for (int v = 0; v < n; ++v) {
    out << "<circle cx=\"" << num(px(d.placement[v].x)) << "\" cy=\""
        << num(py(d.placement[v].y))
        << "\" r=\"4\" fill=\"#1f77b4\" class=\"vertex\"/>\n";
    out << "<text x=\"" << num(px(d.placement[v].x) + 6) << "\" y=\""
        << num(py(d.placement[v].y) - 6) << "\" font-size=\"12\" "
        << "font-family=\"sans-serif\" fill=\"#333\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rcross
