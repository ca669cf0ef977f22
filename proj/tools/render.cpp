#include "render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace hexcount::cli {
namespace {

using geometry::Orient;
using geometry::UnitTriangle;

constexpr double kScale = 36.0;
constexpr double kMargin = 18.0;

struct Pt {
  double x, y;
};

// lattice (i,j) -> plane, then turn -30 degrees so (1,1) points right; svg y grows down
Pt place(int i, int j) {
  const double s3 = std::sqrt(3.0);
  const double cx = i + 0.5 * j, cy = j * s3 / 2;
  const double rx = cx * s3 / 2 + cy * 0.5;
  const double ry = -cx * 0.5 + cy * s3 / 2;
  return {rx * kScale, -ry * kScale};
}

std::array<std::pair<int, int>, 3> corners(const UnitTriangle& t) {
  if (t.o == Orient::up) return {{{t.x, t.y}, {t.x + 1, t.y}, {t.x, t.y + 1}}};
  return {{{t.x + 1, t.y}, {t.x, t.y + 1}, {t.x + 1, t.y + 1}}};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Frame {
  double minx = std::numeric_limits<double>::max(), miny = minx;
  double maxx = std::numeric_limits<double>::lowest(), maxy = maxx;

  void grow(Pt p) {
    minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
  }
  Pt map(Pt p) const { return {p.x - minx + kMargin, p.y - miny + kMargin}; }
};

std::string points(const Frame& f, const std::vector<std::pair<int, int>>& pts) {
  std::string s;
  for (const auto& [i, j] : pts) {
    const Pt p = f.map(place(i, j));
    if (!s.empty()) s += ' ';
    s += fmt(p.x) + ',' + fmt(p.y);
  }
  return s;
}

// rhombus corners in drawing order: apex, shared, apex, shared
std::vector<std::pair<int, int>> rhombus(const UnitTriangle& a, const UnitTriangle& b) {
  const auto ca = corners(a), cb = corners(b);
  std::vector<std::pair<int, int>> shared, apex;
  for (const auto& p : ca) (std::find(cb.begin(), cb.end(), p) != cb.end() ? shared : apex).push_back(p);
  for (const auto& p : cb)
    if (std::find(ca.begin(), ca.end(), p) == ca.end()) apex.push_back(p);
  return {apex[0], shared[0], apex[1], shared[1]};
}

// three lozenge directions, keyed by the down triangle's position relative to the up one
const char* lozenge_fill(const UnitTriangle& a, const UnitTriangle& b) {
  const UnitTriangle& u = a.o == Orient::up ? a : b;
  const UnitTriangle& d = a.o == Orient::up ? b : a;
  if (d.x == u.x && d.y == u.y) return "#f2c14e";
  if (d.x == u.x - 1) return "#5b8e7d";
  return "#a4c3d2";
}

}  // namespace

std::string render_svg(const RenderInput& in) {
  Frame f;
  for (const auto* set : {&in.region.triangles, &in.removed})
    for (const auto& t : *set)
      for (const auto& [i, j] : corners(t)) f.grow(place(i, j));
  if (in.region.triangles.empty() && in.removed.empty()) f.grow({0, 0});
  const double w = f.maxx - f.minx + 2 * kMargin, h = f.maxy - f.miny + 2 * kMargin;

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
    << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n";
  if (!in.title.empty()) o << "<title>" << in.title << "</title>\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  o << "<g id=\"region\" fill=\"#fbfbf6\" stroke=\"#c8c8c8\" stroke-width=\"0.6\">\n";
  for (const auto& t : in.region.triangles) {
    const auto c = corners(t);
    o << "<polygon points=\"" << points(f, {c.begin(), c.end()}) << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g id=\"removed\" fill=\"#4a4a4a\" stroke=\"#4a4a4a\" stroke-width=\"0.6\">\n";
  for (const auto& t : in.removed) {
    const auto c = corners(t);
    o << "<polygon points=\"" << points(f, {c.begin(), c.end()}) << "\"/>\n";
  }
  o << "</g>\n";

  if (in.tiling) {
    o << "<g id=\"tiling\" stroke=\"#202020\" stroke-width=\"1.2\" stroke-linejoin=\"round\">\n";
    for (const auto& [a, b] : in.tiling->rhombi) {
      const bool half = in.region.half_edges.count(geometry::make_pair_sorted(a, b)) != 0;
      o << "<polygon points=\"" << points(f, rhombus(a, b)) << "\" fill=\"" << lozenge_fill(a, b) << '"';
      if (half) o << " stroke-dasharray=\"4 3\"";
      o << "/>\n";
      if (half) {
        const auto r = rhombus(a, b);
        Pt c{0, 0};
        for (const auto& [i, j] : r) {
          const Pt p = f.map(place(i, j));
          c.x += p.x / 4, c.y += p.y / 4;
        }
        o << "<text x=\"" << fmt(c.x) << "\" y=\"" << fmt(c.y + 3.5)
          << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\" stroke=\"none\""
             " fill=\"#202020\">1/2</text>\n";
      }
    }
    o << "</g>\n";
  }

  if (in.axis) {
    // the axis runs through lattice points (i, i+N)
    double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest();
    double y = 0;
    for (const auto* set : {&in.region.triangles, &in.removed})
      for (const auto& t : *set)
        for (const auto& [i, j] : corners(t))
          if (j - i == *in.axis) {
            const Pt p = f.map(place(i, j));
            lo = std::min(lo, p.x), hi = std::max(hi, p.x), y = p.y;
          }
    if (lo <= hi)
      o << "<line x1=\"" << fmt(lo - kMargin / 2) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(hi + kMargin / 2)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#b03030\" stroke-width=\"0.8\" stroke-dasharray=\"2 2\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace hexcount::cli
