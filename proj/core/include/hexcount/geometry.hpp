#pragma once

// Triangular lattice with basis e1 = (1, 0), e2 = (1/2, sqrt(3)/2).
// A lattice point is (i, j). The two triangles anchored at (x, y):
//
//      (x,y+1)____(x+1,y+1)
//          /\    /
//         /  \ D/
//        / U  \/
//       /______\ (x+1,y)
//    (x,y)
//
// U(x,y) touches D(x,y), D(x-1,y), D(x,y-1).
// D(x,y) touches U(x,y), U(x+1,y), U(x,y+1).
//
// hexagon(a,b,c) has corners (0,0) (a,0) (a,b) (a-c,b+c) (-c,b+c) (-c,c).
// For the defect hexagon (a,b,c) = (n,n,N) and the symmetry axis is j - i = N.
// A triangle with anchor (x,y) lies on the axis iff y - x = N.

#include "hexcount/exact.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hexcount::geometry {

enum class Orient : std::uint8_t { up = 0, down = 1 };

struct UnitTriangle {
  int x = 0;
  int y = 0;
  Orient o = Orient::up;

  auto operator<=>(const UnitTriangle&) const = default;
};

inline UnitTriangle up(int x, int y) { return {x, y, Orient::up}; }
inline UnitTriangle down(int x, int y) { return {x, y, Orient::down}; }

// Row-major sweep order: y, then x, then up before down.
bool scan_less(const UnitTriangle& a, const UnitTriangle& b);

std::array<UnitTriangle, 3> neighbors(const UnitTriangle& t);
bool adjacent(const UnitTriangle& a, const UnitTriangle& b);

// Unordered pair, stored with first < second.
using TrianglePair = std::pair<UnitTriangle, UnitTriangle>;
TrianglePair make_pair_sorted(const UnitTriangle& a, const UnitTriangle& b);

struct TriRegion {
  std::string label;
  std::set<UnitTriangle> triangles;
  std::set<TrianglePair> half_edges;

  bool contains(const UnitTriangle& t) const { return triangles.count(t) != 0; }
  std::size_t size() const { return triangles.size(); }
  std::size_t up_count() const;
  std::size_t down_count() const;
  bool balanced() const { return up_count() == down_count(); }
  // Throws std::invalid_argument if a half edge is not an adjacent pair inside the region.
  void validate() const;
};

struct Tiling {
  std::vector<TrianglePair> rhombi;
};

bool is_tiling_of(const Tiling& tiling, const TriRegion& region);

enum class Parity { even, odd };

struct HexSpec {
  int n = 1;
  int N = 2;
  int s = 0;

  Parity parity() const { return N % 2 == 0 ? Parity::even : Parity::odd; }
  int m() const { return N / 2; }
  // Throws std::invalid_argument.
  void validate() const;
};

TriRegion build_hexagon(int a, int b, int c);

// Lattice point shared by the two removed triangles.
std::pair<int, int> defect_vertex(const HexSpec& spec);

// Bowtie removal clipped to the hexagon. For s = 0 and s = n in the even case one
// of the two triangles falls outside, and the result is not balanced.
TriRegion literal_axis_defect(const HexSpec& spec);

// The defect region used for counting. Interior positions remove the bowtie. The even
// extremes s = 0 and s = n remove the one inner triangle at the boundary vertex and
// attach a strip of outer triangles along the lower half of the adjacent N-side; see
// README for why this realises the boundary position.
TriRegion remove_axis_defect(const HexSpec& spec);

struct Halves {
  TriRegion upper;
  TriRegion lower;
};

// upper: strictly above the axis. lower: below the axis plus every axis triangle, with
// the axis rhombus positions at weight 1/2.
Halves split_halves(const HexSpec& spec);

std::vector<UnitTriangle> axis_triangles(const TriRegion& region, int N);

// Left-right mirror of hexagon(n,n,N), keeps the axis: (i,j) -> (n-j, n-i).
UnitTriangle mirror(const UnitTriangle& t, int n);
TriRegion mirror(const TriRegion& region, int n);

struct DualEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rat weight = 1;
};

struct DualGraph {
  std::vector<UnitTriangle> vertices;  // sweep order
  std::vector<DualEdge> edges;         // u < v
  std::vector<std::vector<std::size_t>> incident;

  std::size_t index_of(const UnitTriangle& t) const;  // throws std::out_of_range
  bool bipartite() const;
};

DualGraph dual_graph(const TriRegion& region);

nlohmann::json to_json(const UnitTriangle& t);
nlohmann::json to_json(const TriRegion& region);
TriRegion region_from_json(const nlohmann::json& j);

}  // namespace hexcount::geometry
