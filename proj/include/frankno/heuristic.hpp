#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "frankno/graph.hpp"
#include "frankno/orientation.hpp"
#include "frankno/topology.hpp"

namespace frankno {

// The two local configurations the scan can certify: a 2-factor with exactly
// two odd circuits joined by a direct edge, or joined through two adjacent
// vertices of one even circuit.
enum class WitnessKind { two_odd, two_odd_one_even };

struct HeuristicWitness {
  WitnessKind kind = WitnessKind::two_odd;
  EdgeSet f;                // the perfect matching whose complement is used
  std::vector<int> n1, n2;  // the two odd circuits of the 2-factor
  std::vector<int> w;       // the even circuit carrying y1,y2 (two_odd_one_even)
  int x1 = -1, x2 = -1;     // attachment vertices on n1 / n2
  int y1 = -1, y2 = -1;     // adjacent vertices on w (two_odd_one_even only)
  EdgeSet m;                // perfect matching of the 2-factor minus the named vertices
  EdgeSet z;                // edges on which the two orientations must agree
  Orientation factor_orientation;      // smooth orientation of the 2-factor circuits
  Orientation complement_orientation;  // smooth orientation of f - bridges + m
};

// The unique perfect matching of the 2-factor minus the given vertices that is
// deterministic per component: even paths have exactly one perfect matching,
// even circuits take the alternating class containing their lowest edge index.
// Absence when some component has no perfect matching (odd component or an
// isolated vertex).  Errors: precondition_violated if factor_edges has a
// vertex of degree > 2 once the avoided vertices are removed.
std::optional<EdgeSet> factor_matching_avoiding(const Graph& g,
                                                const EdgeSet& factor_edges,
                                                const std::vector<int>& avoid);

// Each input set must decompose into vertex-disjoint circuits; every circuit
// can be traversed in two directions ("smooth": in- and out-degree 1 at each
// circuit vertex).  Searches for one direction per circuit such that the two
// resulting orientations assign the same direction to every edge of agree_on
// (which must lie in both sets).  Returns (orientation of the first set,
// orientation of the second set) with edges outside the respective set left at
// the default direction, or absence when the constraints are contradictory.
// Errors: not_circuit_decomposition, precondition_violated.
std::optional<std::pair<Orientation, Orientation>>
find_consistent_smooth_orientations(const Graph& g,
                                    const EdgeSet& first_circuits,
                                    const EdgeSet& second_circuits,
                                    const EdgeSet& agree_on);

// Scans all 2-factors (via all perfect matchings, in the deterministic
// enumeration order) for one of the two configurations above; returns the
// first witness found or absence.  Configurations whose validation requires
// suppressing adjacent vertices (girth < 5 degeneracies) are skipped.
// Precondition: g cubic and cyclically 4-edge-connected.
// Errors: precondition_violated; internal_contradiction if the two
// formulations of the cycle-separating-triple gate ever disagree.
std::optional<HeuristicWitness> heuristic_frank2(const Graph& g);

// Builds the pair of orientations promised by the witness: two flows on the
// graph with the bridge edges suppressed (factor valued 1 / complement valued
// -2, and factor valued 2 / complement valued 1), lifted back through the
// subdivisions with the fixed directions of the new edges.  The result always
// passes verify_certificate for genuine witnesses; method is
// "heuristic-2odd" or "heuristic-2odd1even".
// Errors: lift_contradiction when the witness does not support the
// construction.
FrankCertificate certificate_from_witness(const Graph& g,
                                          const HeuristicWitness& w);

}  // namespace frankno
