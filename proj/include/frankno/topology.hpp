#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "frankno/graph.hpp"

namespace frankno {

// Edge sets are sorted vectors of unique edge indices over a fixed graph.
using EdgeSet = std::vector<int>;

bool edgeset_contains(const EdgeSet& s, int e);

// True iff no edge cut of size < k exists (k in 1..4 used here; any k >= 0
// accepted).  Disconnected graphs fail for every k >= 1.  Decided by max-flow
// between a fixed root and every other vertex with unit edge capacities.
bool edge_connectivity_at_least(const Graph& g, int k);

// True iff G - s is disconnected with at least two components each containing
// a cycle (a component contains a cycle iff something survives iterated
// deletion of degree <= 1 vertices).
bool is_cyclic_edge_cut(const Graph& g, const EdgeSet& s);

// True iff no cyclic edge cut of size < k exists; exhaustive enumeration of
// edge subsets of size <= k-1 (k in {3,4,5}).  Graphs with no two
// vertex-disjoint cycles have no cyclic edge cut at all, so they pass for
// every k (cyclic edge connectivity treated as +infinity).
bool cyclic_edge_connectivity_at_least(const Graph& g, int k);

// --- smoothing --------------------------------------------------------------

// Result of removing edge e = xy from a cubic graph and suppressing the two
// degree-2 endpoints: each endpoint is replaced by an edge joining its two
// remaining neighbours.  Vertices are relabelled contiguously.
struct SmoothResult {
  Graph graph;                      // G~e, cubic on n-2 vertices
  std::vector<int> vertex_to_old;   // new vertex -> old vertex
  std::vector<int> old_to_new_vertex;  // old vertex -> new vertex or -1
  // old edge -> new edge; -1 for the removed edge e and the four edges that
  // were merged (those map to the merged edge carrying them, see edge_paths).
  std::vector<int> old_to_new_edge;
  // For each new edge: the path of OLD vertex ids it represents, listed from
  // the old id of its stored tail u to the old id of its stored head v.
  // Untouched edges have a 2-vertex path; merged edges a 3-vertex path.
  std::vector<std::vector<int>> edge_paths;
};

// Errors: suppression_creates_loop if an endpoint's two remaining neighbours
// coincide (impossible for simple cubic input), suppression_creates_parallel
// if they are already adjacent (or the two merged edges coincide).
SmoothResult smooth_edge(const Graph& g, int e);

// --- subdivision surgeries (inverses of smoothing) ---------------------------

// Subdivide e1 with x1 and e2 with x2, then add the edge x1x2.
struct BridgeSurgery {
  int e1 = -1;
  int e2 = -1;
};

// Subdivide e1 with x1, e2 with x2 and f with the adjacent pair y1, y2, then
// add the edges x1y1 and x2y2.  y1 lands next to f's stored endpoint u when
// y1_at_f_u is set, next to v otherwise.
struct PathSurgery {
  int e1 = -1;
  int e2 = -1;
  int f = -1;
  bool y1_at_f_u = true;
};

struct SurgeryResult {
  Graph graph;
  int x1 = -1, x2 = -1;  // subdivision vertices of e1 / e2
  int y1 = -1, y2 = -1;  // subdivision vertices of f (path surgery only)
  // old edge -> new edge; -1 for each subdivided edge.
  std::vector<int> old_to_new_edge;
  // Paths of NEW vertex ids replacing the subdivided edges, from old u to old
  // v: for e1 {u1, x1, v1}, for e2 {u2, x2, v2}, for f {a, y1.., y2.., b}.
  std::vector<int> path_e1, path_e2, path_f;
};

// Errors: adjacent_edges if the named edges are not pairwise independent.
SurgeryResult subdivide_and_connect(const Graph& g, const BridgeSurgery& s);
SurgeryResult subdivide_and_connect(const Graph& g, const PathSurgery& s);

// --- matchings, 2-factors, colourings ----------------------------------------

// Visits every perfect matching exactly once; deterministic order: always
// branch on the lowest-index unmatched vertex, trying its incident edges in
// index order.  Return false from the visitor to stop early.
void for_each_perfect_matching(const Graph& g,
                               const std::function<bool(const EdgeSet&)>& visit);
std::vector<EdgeSet> enumerate_perfect_matchings(const Graph& g);

struct TwoFactor {
  EdgeSet matching;                        // the perfect matching F
  std::vector<std::vector<int>> circuits;  // vertex circuits of C = G - F
  std::vector<int> odd_circuit_indices;    // circuits of odd length
};

// Circuit decomposition of G - f for a perfect matching f of cubic g.
// Errors: not_perfect_matching, not_cubic.
TwoFactor two_factor(const Graph& g, const EdgeSet& f);

// Decomposes an edge subset in which every vertex has degree 0 or 2 into
// vertex-disjoint circuits (vertex lists).  Deterministic: circuits start at
// their lowest vertex and first step to the lower-numbered neighbour.
// Errors: not_circuit_decomposition.
std::vector<std::vector<int>> circuit_decomposition(const Graph& g,
                                                    const EdgeSet& edges);

// First proper 3-edge-colouring in lexicographic order (edges coloured in
// index order, colours 0 < 1 < 2), or absence.  Errors: not_cubic.
std::optional<std::vector<int>> three_edge_colouring(const Graph& g);

// Minimum number of odd circuits over all 2-factors; absence means no perfect
// matching exists (oddness infinite).  Errors: not_cubic.
std::optional<int> oddness(const Graph& g);

// True iff smoothing any edge leaves a non-3-edge-colourable graph.  Errors:
// not_snark if g is not a snark; suppression_creates_parallel is propagated
// (girth >= 5 inputs never trigger it).
bool is_strong_snark(const Graph& g);

// Replaces a vertex of degree d >= 4 by a d-circuit matched to its former
// neighbours.  The circuit positions are assigned so that each leaf block of the
// bridge forest of G - v receives two circuit positions i and k+i (its two
// lowest-numbered former neighbours), remaining neighbours filling the other
// positions in index order; this keeps the result cyclically 4-edge-connected
// when g is.  New circuit vertices take ids n-1 .. n+d-2 after relabelling.
// Errors: degree_too_small (d < 4); precondition_violated (g not
// 3-edge-connected or not cyclically 4-edge-connected).
Graph local_cubic_modification(const Graph& g, int v);

}  // namespace frankno
