#pragma once

#include <hexcount/geometry.hpp>

#include <optional>
#include <set>
#include <string>

namespace hexcount::cli {

struct RenderInput {
  geometry::TriRegion region;
  std::set<geometry::UnitTriangle> removed;  // drawn shaded
  std::optional<geometry::Tiling> tiling;
  std::optional<int> axis;  // N of the symmetry axis j - i = N
  std::string title;
};

// Lattice drawn with the axis direction (1,1) horizontal. Fixed two-decimal
// coordinates so the bytes only depend on the input.
std::string render_svg(const RenderInput& in);

}  // namespace hexcount::cli
