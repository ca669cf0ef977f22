#pragma once

#include "hexcount/geometry.hpp"

#include <cstddef>
#include <optional>

namespace hexcount::matchcount {

using geometry::DualGraph;
using geometry::Tiling;
using geometry::TriRegion;

using MatchCount = Rat;

// Sum over perfect matchings of the product of edge weights.
// Sweeps vertices in graph order keeping the set of already-covered vertices ahead of
// the cursor; the window is the largest index gap of an edge and must stay <= 128.
MatchCount count_matchings(const DualGraph& g);

// Plain recursive enumeration, for cross-checking. Throws std::length_error above
// kBacktrackLimit vertices.
inline constexpr std::size_t kBacktrackLimit = 40;
MatchCount count_matchings_backtrack(const DualGraph& g);

MatchCount count_tilings(const TriRegion& region);

// Repeatedly covers the first uncovered triangle in sweep order with its first
// neighbor (sweep order) that still leaves a completable remainder.
std::optional<Tiling> find_tiling(const TriRegion& region);

// Largest index gap of an edge, plus one.
std::size_t frontier_width(const DualGraph& g);

}  // namespace hexcount::matchcount
