#include "hexcount/matchcount.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hexcount::matchcount {
namespace {

__extension__ typedef unsigned __int128 Mask;
constexpr std::size_t kMaxWidth = 128;

struct MaskHash {
  std::size_t operator()(Mask m) const noexcept {
    const auto lo = static_cast<std::uint64_t>(m);
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    return std::hash<std::uint64_t>{}(lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL));
  }
};

struct Forward {
  std::size_t offset;
  Rat weight;
};

std::vector<std::vector<Forward>> forward_edges(const DualGraph& g) {
  if (frontier_width(g) > kMaxWidth) throw std::length_error("sweep frontier wider than 128");
  std::vector<std::vector<Forward>> fw(g.vertices.size());
  for (const auto& e : g.edges) {
    const std::size_t lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    fw[lo].push_back({hi - lo, e.weight});
  }
  for (auto& list : fw)
    std::sort(list.begin(), list.end(), [](const Forward& a, const Forward& b) { return a.offset < b.offset; });
  return fw;
}

bool all_unit(const DualGraph& g) {
  return std::all_of(g.edges.begin(), g.edges.end(), [](const auto& e) { return e.weight == 1; });
}

template <typename Value>
Value sweep(const DualGraph& g, const std::vector<std::vector<Forward>>& fw) {
  std::unordered_map<Mask, Value, MaskHash> cur, next;
  cur.emplace(Mask{0}, Value(1));
  for (std::size_t p = 0; p < g.vertices.size(); ++p) {
    next.clear();
    next.reserve(cur.size() * 2);
    for (const auto& [mask, val] : cur) {
      if (mask & 1) {
        next[mask >> 1] += val;
        continue;
      }
      for (const auto& f : fw[p]) {
        const Mask bit = Mask{1} << f.offset;
        if (mask & bit) continue;
        Value& slot = next[(mask | bit) >> 1];
        if constexpr (std::is_same_v<Value, Int>) {
          slot += val;
        } else {
          if (f.weight == 1)
            slot += val;
          else
            slot += val * f.weight;
        }
      }
    }
    std::swap(cur, next);
    if (cur.empty()) return Value(0);
  }
  auto it = cur.find(Mask{0});
  return it == cur.end() ? Value(0) : it->second;
}

}  // namespace

std::size_t frontier_width(const DualGraph& g) {
  std::size_t w = 0;
  for (const auto& e : g.edges) w = std::max(w, (e.u > e.v ? e.u - e.v : e.v - e.u) + 1);
  return w;
}

MatchCount count_matchings(const DualGraph& g) {
  if (g.vertices.size() % 2 != 0) return 0;
  if (g.vertices.empty()) return 1;
  const auto fw = forward_edges(g);
  if (all_unit(g)) return Rat(sweep<Int>(g, fw));
  return sweep<Rat>(g, fw);
}

MatchCount count_matchings_backtrack(const DualGraph& g) {
  const std::size_t nv = g.vertices.size();
  if (nv > kBacktrackLimit) throw std::length_error("backtracking oracle capped at 40 vertices");
  if (nv % 2 != 0) return 0;
  std::vector<bool> used(nv, false);
  auto rec = [&](auto&& self, std::size_t from) -> Rat {
    while (from < nv && used[from]) ++from;
    if (from == nv) return 1;
    used[from] = true;
    Rat total = 0;
    for (std::size_t ei : g.incident[from]) {
      const auto& e = g.edges[ei];
      const std::size_t other = e.u == from ? e.v : e.u;
      if (used[other]) continue;
      used[other] = true;
      total += e.weight * self(self, from + 1);
      used[other] = false;
    }
    used[from] = false;
    return total;
  };
  return rec(rec, 0);
}

MatchCount count_tilings(const TriRegion& region) { return count_matchings(geometry::dual_graph(region)); }

std::optional<Tiling> find_tiling(const TriRegion& region) {
  const DualGraph g = geometry::dual_graph(region);
  const std::size_t nv = g.vertices.size();
  if (nv % 2 != 0) return std::nullopt;
  if (nv == 0) return Tiling{};
  const auto fw = forward_edges(g);

  // reachable frontier states, position by position
  std::vector<std::unordered_set<Mask, MaskHash>> reach(nv + 1);
  reach[0].insert(0);
  auto successors = [&](std::size_t p, Mask mask, auto&& visit) {
    if (mask & 1) {
      visit(mask >> 1, std::size_t{0});
      return;
    }
    for (const auto& f : fw[p]) {
      const Mask bit = Mask{1} << f.offset;
      if (!(mask & bit)) visit((mask | bit) >> 1, f.offset);
    }
  };
  for (std::size_t p = 0; p < nv; ++p)
    for (Mask mask : reach[p]) successors(p, mask, [&](Mask nm, std::size_t) { reach[p + 1].insert(nm); });
  if (!reach[nv].count(0)) return std::nullopt;

  // prune to states that still reach the empty frontier at the end
  std::vector<std::unordered_set<Mask, MaskHash>> good(nv + 1);
  good[nv].insert(0);
  for (std::size_t p = nv; p-- > 0;)
    for (Mask mask : reach[p]) {
      bool ok = false;
      successors(p, mask, [&](Mask nm, std::size_t) { ok = ok || good[p + 1].count(nm) != 0; });
      if (ok) good[p].insert(mask);
    }

  Tiling t;
  Mask mask = 0;
  for (std::size_t p = 0; p < nv; ++p) {
    bool moved = false;
    successors(p, mask, [&](Mask nm, std::size_t offset) {
      if (moved || !good[p + 1].count(nm)) return;
      if (offset != 0) t.rhombi.push_back(geometry::make_pair_sorted(g.vertices[p], g.vertices[p + offset]));
      mask = nm;
      moved = true;
    });
    if (!moved) return std::nullopt;
  }
  return t;
}

}  // namespace hexcount::matchcount
