#include "frankno/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "frankno/error.hpp"
#include "frankno/topology.hpp"

namespace frankno {

namespace {

// Strong connectivity of an explicit arc list on n vertices via forward and
// backward sweeps from vertex 0.  Kept separate from the Orientation-based
// traversal so definitional checks stay independent.
bool arcs_strong(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> out(static_cast<size_t>(n));
  std::vector<std::vector<int>> in(static_cast<size_t>(n));
  for (const auto& [a, b] : arcs) {
    out[static_cast<size_t>(a)].push_back(b);
    in[static_cast<size_t>(b)].push_back(a);
  }
  const auto sweep = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return sweep(out) && sweep(in);
}

uint64_t edge_mask(const EdgeSet& s) {
  uint64_t mask = 0;
  for (int e : s) mask |= uint64_t{1} << e;
  return mask;
}

// Exact cover search over maximal deletable-set masks, branching on the
// lowest uncovered edge.
bool cover_exists(uint64_t covered, int remaining, uint64_t all,
                  const std::vector<uint64_t>& sets, int largest_set) {
  if (covered == all) return true;
  if (remaining == 0) return false;
  const int missing = std::popcount(all & ~covered);
  if (missing > remaining * largest_set) return false;
  const int e = std::countr_zero(all & ~covered);
  for (uint64_t s : sets) {
    if ((s >> e) & 1u) {
      if (cover_exists(covered | s, remaining - 1, all, sets, largest_set)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

void for_each_strong_orientation(
    const Graph& g, const std::function<bool(const Orientation&)>& visit,
    int edge_cap) {
  if (g.m() > edge_cap) {
    raise(errc::cap_exceeded,
          "orientation enumeration supports at most " +
              std::to_string(edge_cap) + " edges, got " + std::to_string(g.m()));
  }
  const int m = g.m();
  if (m == 0) {
    Orientation empty(0);
    if (is_strong(g, empty)) visit(empty);
    return;
  }
  const uint64_t patterns = uint64_t{1} << (m - 1);
  for (uint64_t k = 0; k < patterns; ++k) {
    Orientation o(m);
    for (int e = 1; e < m; ++e) {
      o.set_reversed(e, (k >> (m - 1 - e)) & 1u);
    }
    if (is_strong(g, o)) {
      if (!visit(o)) return;
    }
  }
}

std::vector<Orientation> strong_orientations(const Graph& g, int edge_cap) {
  std::vector<Orientation> out;
  for_each_strong_orientation(
      g,
      [&out](const Orientation& o) {
        out.push_back(o);
        return true;
      },
      edge_cap);
  return out;
}

bool deletable_by_definition(const Graph& g, const Orientation& o, int e) {
  if (o.size() != g.m() || e < 0 || e >= g.m()) {
    raise(errc::precondition_violated,
          "orientation/edge do not match the graph");
  }
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<size_t>(g.m()));
  for (int i = 0; i < g.m(); ++i) {
    if (i != e) arcs.push_back({o.tail(g, i), o.head(g, i)});
  }
  return arcs_strong(g.n(), arcs);
}

int frank_number_bruteforce(const Graph& g, int kmax) {
  if (!g.is_cubic() || !edge_connectivity_at_least(g, 3)) {
    raise(errc::precondition_violated,
          "Frank numbers are computed for cubic 3-edge-connected graphs");
  }
  if (kmax < 1) {
    raise(errc::precondition_violated, "kmax must be at least 1");
  }
  if (g.m() > kOrientationEdgeCap) {
    raise(errc::cap_exceeded,
          "brute force supports at most " +
              std::to_string(kOrientationEdgeCap) + " edges, got " +
              std::to_string(g.m()));
  }
  if (kmax >= 3 && g.m() > kSetCoverEdgeCap) {
    raise(errc::cap_exceeded,
          "set-cover minimisation beyond pairs supports at most " +
              std::to_string(kSetCoverEdgeCap) + " edges, got " +
              std::to_string(g.m()));
  }

  std::vector<EdgeSet> dsets;
  for_each_strong_orientation(g, [&](const Orientation& o) {
    EdgeSet d = deletable_edges(g, o);
    if (!d.empty()) dsets.push_back(std::move(d));
    return true;
  });
  std::sort(dsets.begin(), dsets.end());
  dsets.erase(std::unique(dsets.begin(), dsets.end()), dsets.end());

  // Keep only maximal sets: replacing a dominated set by a superset never
  // hurts a cover, so the minimum cover size is unchanged.
  std::vector<uint64_t> masks;
  for (const EdgeSet& s : dsets) masks.push_back(edge_mask(s));
  std::vector<uint64_t> maximal;
  for (size_t i = 0; i < masks.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < masks.size() && !dominated; ++j) {
      if (i != j && (masks[i] & masks[j]) == masks[i] && masks[i] != masks[j]) {
        dominated = true;
      }
    }
    if (!dominated) maximal.push_back(masks[i]);
  }

  int largest = 0;
  for (uint64_t s : maximal) largest = std::max(largest, std::popcount(s));
  const uint64_t all =
      g.m() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.m()) - 1;
  for (int k = 1; k <= kmax; ++k) {
    if (cover_exists(0, k, all, maximal, largest)) return k;
  }
  return kmax + 1;
}

}  // namespace frankno
