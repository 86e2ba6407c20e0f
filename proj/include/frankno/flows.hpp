#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frankno/graph.hpp"
#include "frankno/orientation.hpp"
#include "frankno/topology.hpp"

namespace frankno {

// Integer flow on a host graph: Kirchhoff conservation at every vertex.
// Subgraph flows are represented with value 0 outside the subgraph.
struct IntFlow {
  Orientation orientation;
  std::vector<int> value;
};

// Group-valued flow with elements (first, second).  The first coordinate is
// of order 2 and therefore orientation-free; the second lives in Z2 or Z3
// depending on the group tag and is signed by `orientation` when its order
// is 3.
enum class FlowGroup { z2xz2, z2xz3 };

struct GroupFlow {
  FlowGroup group = FlowGroup::z2xz2;
  Orientation orientation;
  std::vector<std::pair<uint8_t, uint8_t>> value;
};

// Conservation checks; the first violating vertex is reported on failure.
bool verify_flow(const Graph& g, const IntFlow& fl,
                 int* first_bad_vertex = nullptr);
bool verify_flow(const Graph& g, const GroupFlow& fl,
                 int* first_bad_vertex = nullptr);

bool is_nowhere_zero(const IntFlow& fl);
bool is_nowhere_zero(const GroupFlow& fl);
bool is_all_positive(const IntFlow& fl);

// Flips negative-valued edges so every value becomes positive; conservation
// and absolute values are preserved.  Errors: zero_edge.
IntFlow to_all_positive(const Graph& g, const IntFlow& fl);

// Extends both flows to the host by zero, rewrites b onto a's orientation
// (flipping disagreeing edges with negated values), adds the values and
// makes the result all-positive.  Errors: cancellation_to_zero when some
// edge of the sum vanishes (including edges covered by neither flow).
IntFlow positive_combination(const Graph& g, const IntFlow& a,
                             const IntFlow& b);

// An edge of value 2 is strong when no 3-edge-cut through it has both other
// edges valued 1.  Pre: fl all-positive nowhere-zero.  Errors: value_not_two.
bool is_strong_two_edge(const Graph& g, const IntFlow& fl, int e);

// Edges an all-positive nowhere-zero flow guarantees deletable on a
// 3-edge-connected graph: every value-1 edge and every strong 2-edge.
// Always a subset of deletable_edges(g, fl.orientation).
EdgeSet flow_guaranteed_deletable(const Graph& g, const IntFlow& fl);

// Nowhere-zero (Z2 x Z2)-flow, or absence.  For cubic graphs this is driven
// by 3-edge-colourability (colours map to (0,1), (1,0), (1,1)); otherwise a
// backtracking search with conservation propagation runs.
std::optional<GroupFlow> find_z2z2_flow(const Graph& g);

// Nowhere-zero (Z2 x Z3)-flow found by backtracking with conservation
// propagation; guaranteed to exist for 3-edge-connected graphs.
std::optional<GroupFlow> find_z2z3_flow(const Graph& g);

// Edge classes used by the four-orientation construction: membership in the
// order-2 support (d), the colour of the order-3 support edge (a/b/c), and
// whether the two support orientations agree (same) or disagree (opposite)
// on edges lying in both.
enum class FlowEdgeClass : uint8_t {
  d_only,
  a_only,
  a_same,
  a_opposite,
  b_only,
  b_same,
  b_opposite,
  c_only,
  c_same,
  c_opposite,
};

// Two-orientation certificate for a 3-edge-connected graph with a
// nowhere-zero (Z2 x Z2)-flow: both Eulerian colour-class subgraphs are
// peeled into circuits, smoothly oriented, and combined with values (1, 2)
// and (2, -1).  Every edge ends with value 1 in exactly one of the two
// resulting flows, so the certificate always verifies.  The constructed
// flows are exported through flows_out when requested.
FrankCertificate orientations_from_4flow(const Graph& g, const GroupFlow& gf,
                                         std::vector<IntFlow>* flows_out = nullptr);

// Four-orientation certificate for a cubic 3-edge-connected graph from a
// nowhere-zero (Z2 x Z3)-flow: the order-2 support forms disjoint circuits,
// the order-3 support is a subdivided cubic bipartite multigraph plus
// circuits; colours and orientations are combined with four fixed value
// rows so that every edge gets value 1 somewhere.  All flow values stay
// at most 6.  The four flows and the per-edge classes are exported through
// the out parameters when requested.
FrankCertificate four_orientations(const Graph& g, const GroupFlow& gf,
                                   std::vector<IntFlow>* flows_out = nullptr,
                                   std::vector<FlowEdgeClass>* classes_out = nullptr);

}  // namespace frankno
