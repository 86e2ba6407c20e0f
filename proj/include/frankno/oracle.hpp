#pragma once

#include <functional>
#include <vector>

#include "frankno/graph.hpp"
#include "frankno/orientation.hpp"

namespace frankno {

// Hard caps keeping every brute-force call desk-sized.
inline constexpr int kOrientationEdgeCap = 30;
inline constexpr int kSetCoverEdgeCap = 18;

// Streams every strong orientation of g with edge 0 fixed to its stored
// direction (one representative per reversal pair), in lexicographic order of
// the direction bit string.  The visitor returns false to stop early.
// Errors: cap_exceeded when m > edge_cap.
void for_each_strong_orientation(
    const Graph& g, const std::function<bool(const Orientation&)>& visit,
    int edge_cap = kOrientationEdgeCap);

std::vector<Orientation> strong_orientations(
    const Graph& g, int edge_cap = kOrientationEdgeCap);

// Literal deletability: drop the edge and test strong connectivity of what
// remains, using a traversal independent of the path-based is_deletable.
// A non-strong orientation yields false for every edge.
bool deletable_by_definition(const Graph& g, const Orientation& o, int e);

// Smallest k <= kmax such that the deletable sets of k strong orientations
// cover E(g); returns kmax + 1 when no such k exists.  Minimization works on
// the distinct maximal deletable sets and solves exact set cover.
// Pre: g cubic and 3-edge-connected; m <= 30, and m <= 18 when kmax >= 3.
// Errors: precondition_violated, cap_exceeded.
int frank_number_bruteforce(const Graph& g, int kmax);

}  // namespace frankno
