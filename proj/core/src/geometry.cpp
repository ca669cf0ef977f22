#include "hexcount/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace hexcount::geometry {

bool scan_less(const UnitTriangle& a, const UnitTriangle& b) {
  return std::tie(a.y, a.x, a.o) < std::tie(b.y, b.x, b.o);
}

std::array<UnitTriangle, 3> neighbors(const UnitTriangle& t) {
  if (t.o == Orient::up) return {down(t.x, t.y), down(t.x - 1, t.y), down(t.x, t.y - 1)};
  return {up(t.x, t.y), up(t.x + 1, t.y), up(t.x, t.y + 1)};
}

bool adjacent(const UnitTriangle& a, const UnitTriangle& b) {
  for (const auto& c : neighbors(a))
    if (c == b) return true;
  return false;
}

TrianglePair make_pair_sorted(const UnitTriangle& a, const UnitTriangle& b) {
  return a < b ? TrianglePair{a, b} : TrianglePair{b, a};
}

std::size_t TriRegion::up_count() const {
  return static_cast<std::size_t>(std::count_if(triangles.begin(), triangles.end(),
                                                [](const auto& t) { return t.o == Orient::up; }));
}

std::size_t TriRegion::down_count() const { return triangles.size() - up_count(); }

void TriRegion::validate() const {
  for (const auto& [a, b] : half_edges) {
    if (!contains(a) || !contains(b))
      throw std::invalid_argument("half edge member outside the region");
    if (!adjacent(a, b)) throw std::invalid_argument("half edge joins non-adjacent triangles");
  }
}

bool is_tiling_of(const Tiling& tiling, const TriRegion& region) {
  std::set<UnitTriangle> seen;
  for (const auto& [a, b] : tiling.rhombi) {
    if (!adjacent(a, b) || !region.contains(a) || !region.contains(b)) return false;
    if (!seen.insert(a).second || !seen.insert(b).second) return false;
  }
  return seen == region.triangles;
}

void HexSpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (N < 2) throw std::invalid_argument("N must be at least 2");
  if (parity() == Parity::even) {
    if (s < 0 || s > n) throw std::invalid_argument("even N needs 0 <= s <= n");
  } else if (s < 1 || s > n) {
    throw std::invalid_argument("odd N needs 1 <= s <= n");
  }
}

TriRegion build_hexagon(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("hexagon sides must be positive");
  // corners scaled by 3 so centroids are integral
  const std::array<std::pair<long, long>, 6> poly{{{0, 0},
                                                   {3L * a, 0},
                                                   {3L * a, 3L * b},
                                                   {3L * (a - c), 3L * (b + c)},
                                                   {-3L * c, 3L * (b + c)},
                                                   {-3L * c, 3L * c}}};
  auto inside = [&](long px, long py) {
    for (std::size_t k = 0; k < poly.size(); ++k) {
      auto [x0, y0] = poly[k];
      auto [x1, y1] = poly[(k + 1) % poly.size()];
      if ((x1 - x0) * (py - y0) - (y1 - y0) * (px - x0) <= 0) return false;
    }
    return true;
  };
  TriRegion r;
  r.label = "hexagon(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  for (int y = 0; y < b + c; ++y)
    for (int x = -c; x < a; ++x) {
      if (inside(3L * x + 1, 3L * y + 1)) r.triangles.insert(up(x, y));
      if (inside(3L * x + 2, 3L * y + 2)) r.triangles.insert(down(x, y));
    }
  return r;
}

std::pair<int, int> defect_vertex(const HexSpec& spec) {
  spec.validate();
  const int m = spec.m();
  const int i = spec.parity() == Parity::even ? -m + spec.s : -m + spec.s - 1;
  return {i, i + spec.N};
}

static std::string spec_label(const HexSpec& spec) {
  return "(" + std::to_string(spec.n) + "," + std::to_string(spec.N) + "," +
         std::to_string(spec.s) + ")";
}

TriRegion literal_axis_defect(const HexSpec& spec) {
  auto [i, j] = defect_vertex(spec);
  TriRegion r = build_hexagon(spec.n, spec.n, spec.N);
  r.label = "literal-defect" + spec_label(spec);
  r.triangles.erase(down(i - 1, j - 1));
  r.triangles.erase(up(i, j));
  return r;
}

// Left extreme of the even case: drop U(-m,m) and glue on the outer triangles
// U(-N+t, N-t-1), t = m..N-1, joined by D(-N+t, N-t-2), t = m..N-2.
static TriRegion left_boundary_defect(int n, int N) {
  const int m = N / 2;
  TriRegion r = build_hexagon(n, n, N);
  r.triangles.erase(up(-m, m));
  for (int t = m; t < N; ++t) r.triangles.insert(up(-N + t, N - t - 1));
  for (int t = m; t + 1 < N; ++t) r.triangles.insert(down(-N + t, N - t - 2));
  return r;
}

TriRegion remove_axis_defect(const HexSpec& spec) {
  spec.validate();
  TriRegion r;
  if (spec.parity() == Parity::even && spec.s == 0) {
    r = left_boundary_defect(spec.n, spec.N);
  } else if (spec.parity() == Parity::even && spec.s == spec.n) {
    r = mirror(left_boundary_defect(spec.n, spec.N), spec.n);
  } else {
    r = literal_axis_defect(spec);
  }
  r.label = "defect" + spec_label(spec);
  return r;
}

std::vector<UnitTriangle> axis_triangles(const TriRegion& region, int N) {
  std::vector<UnitTriangle> out;
  for (const auto& t : region.triangles)
    if (t.y - t.x == N) out.push_back(t);
  return out;
}

Halves split_halves(const HexSpec& spec) {
  const TriRegion g = remove_axis_defect(spec);
  const bool odd = spec.parity() == Parity::odd;
  Halves h;
  h.upper.label = odd ? "Rtilde+" : "R+";
  h.lower.label = odd ? "Rtilde-" : "R-";
  for (const auto& t : g.triangles) {
    if (t.y - t.x > spec.N)
      h.upper.triangles.insert(t);
    else
      h.lower.triangles.insert(t);
  }
  for (const auto& t : axis_triangles(h.lower, spec.N))
    for (const auto& c : neighbors(t))
      if (c.y - c.x == spec.N && h.lower.contains(c)) h.lower.half_edges.insert(make_pair_sorted(t, c));
  return h;
}

UnitTriangle mirror(const UnitTriangle& t, int n) {
  const Orient o = t.o == Orient::up ? Orient::down : Orient::up;
  return {n - t.y - 1, n - t.x - 1, o};
}

TriRegion mirror(const TriRegion& region, int n) {
  TriRegion r;
  r.label = region.label;
  for (const auto& t : region.triangles) r.triangles.insert(mirror(t, n));
  for (const auto& [a, b] : region.half_edges) r.half_edges.insert(make_pair_sorted(mirror(a, n), mirror(b, n)));
  return r;
}

std::size_t DualGraph::index_of(const UnitTriangle& t) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), t, scan_less);
  if (it == vertices.end() || *it != t) throw std::out_of_range("triangle not in graph");
  return static_cast<std::size_t>(it - vertices.begin());
}

bool DualGraph::bipartite() const {
  return std::all_of(edges.begin(), edges.end(),
                     [&](const DualEdge& e) { return vertices[e.u].o != vertices[e.v].o; });
}

DualGraph dual_graph(const TriRegion& region) {
  region.validate();
  DualGraph g;
  g.vertices.assign(region.triangles.begin(), region.triangles.end());
  std::sort(g.vertices.begin(), g.vertices.end(), scan_less);
  g.incident.resize(g.vertices.size());
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (const auto& c : neighbors(g.vertices[u])) {
      if (!region.contains(c)) continue;
      const std::size_t v = g.index_of(c);
      if (v < u) continue;
      const bool half = region.half_edges.count(make_pair_sorted(g.vertices[u], c)) != 0;
      g.incident[u].push_back(g.edges.size());
      g.incident[v].push_back(g.edges.size());
      g.edges.push_back({u, v, half ? Rat(1, 2) : Rat(1)});
    }
  }
  return g;
}

nlohmann::json to_json(const UnitTriangle& t) {
  return nlohmann::json::array({t.x, t.y, t.o == Orient::up ? "u" : "d"});
}

nlohmann::json to_json(const TriRegion& region) {
  std::vector<nlohmann::json> tris;
  for (const auto& t : region.triangles) tris.push_back(to_json(t));
  std::sort(tris.begin(), tris.end());
  std::vector<nlohmann::json> halves;
  for (const auto& [a, b] : region.half_edges) {
    auto ja = to_json(a), jb = to_json(b);
    if (jb < ja) std::swap(ja, jb);
    halves.push_back(nlohmann::json::array({ja, jb}));
  }
  std::sort(halves.begin(), halves.end());
  return {{"label", region.label}, {"triangles", tris}, {"half_edges", halves}};
}

static UnitTriangle triangle_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("triangle must be [x, y, o]");
  const auto o = j[2].get<std::string>();
  if (o != "u" && o != "d") throw std::invalid_argument("orientation must be \"u\" or \"d\"");
  return {j[0].get<int>(), j[1].get<int>(), o == "u" ? Orient::up : Orient::down};
}

TriRegion region_from_json(const nlohmann::json& j) {
  TriRegion r;
  r.label = j.value("label", "");
  for (const auto& t : j.at("triangles")) r.triangles.insert(triangle_from_json(t));
  if (j.contains("half_edges"))
    for (const auto& e : j.at("half_edges"))
      r.half_edges.insert(make_pair_sorted(triangle_from_json(e.at(0)), triangle_from_json(e.at(1))));
  r.validate();
  return r;
}

}  // namespace hexcount::geometry
