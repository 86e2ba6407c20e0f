#pragma once

#include <chrono>
#include <optional>

#include "frankno/graph.hpp"
#include "frankno/orientation.hpp"
#include "frankno/topology.hpp"

namespace frankno {

// State of the propagation-driven search for a second orientation whose
// deletable set covers everything the reference orientation misses.
struct SearchState {
  const Graph* graph = nullptr;
  EdgeSet d;                  // deletable edges of the reference orientation
  std::vector<char> in_d;     // membership mask aligned with graph edges
  PartialOrientation partial;
  long long nodes = 0;         // branch nodes expanded
  long long propagations = 0;  // arcs committed (explicit and forced)
  // Budgets checked inside complete_orientation; 0 / untimed = unlimited.
  long long node_budget = 0;
  bool timed = false;
  std::chrono::steady_clock::time_point deadline{};
};

SearchState make_search_state(const Graph& g, const EdgeSet& d);

// Pure feasibility test for committing the arc tail->head (edge must be
// unoriented): both endpoints keep at least one incoming and one outgoing
// side available, a deletable edge never shares its tail's out-side or its
// head's in-side with another deletable edge, and a non-deletable edge is
// never forced into the single-direction slot of one of its endpoints.
bool can_add_arc(const SearchState& s, int tail, int head);

// Commits tail->head and then every arc it forces, recursively: last-free-edge
// completions at endpoints that saturated one direction, the cascades around
// a committed deletable edge (other deletable edges point into its tail and
// out of its head; paired non-deletable edges point in/out), and the cascades
// around a committed non-deletable edge.  Returns false when the arc is
// already present reversed, fails the feasibility test, or forces a
// contradiction; the state is then partially modified and must be rolled back
// by the caller (restore a saved copy).
bool add_arcs_recursively(SearchState& s, int tail, int head);

// Depth-first completion: branches on an unoriented edge with the most
// oriented neighbouring edges (ties by edge index), forward direction first.
// Accepts a complete orientation iff the reference deletable set together
// with the completion's deletable set covers every edge.
// Errors: budget_exceeded when the state's node budget or deadline trips.
std::optional<Orientation> complete_orientation(SearchState& s);

struct ExactOptions {
  long long max_nodes = 0;  // 0 = unlimited; counts outer orientations
                            // examined plus inner branch nodes
  long long timeout_ms = 0;  // 0 = unlimited
};

struct ExactStats {
  long long orientations_scanned = 0;  // outer orientations examined
  long long strong_orientations = 0;   // survived the strong screen
  long long searches_run = 0;          // passed the per-vertex deletable filter
  long long nodes = 0;                 // inner branch nodes expanded
  long long propagations = 0;          // inner arcs committed
};

struct ExactResult {
  bool frank2 = false;
  std::optional<FrankCertificate> certificate;  // present iff frank2
  ExactStats stats;
};

// Decides whether two orientations suffice by scanning every orientation of
// the graph (first edge fixed, the rest in Gray-code order so the incremental
// degree screen is O(1) per step), keeping the strong ones whose deletable
// set touches every vertex, and running the propagation search for a covering
// partner.  Deterministic; the first success is returned as a verified
// certificate with method "exact".
// Precondition: g cubic and 3-edge-connected.
// Errors: precondition_violated, budget_exceeded.
ExactResult exact_frank2(const Graph& g, const ExactOptions& options = {});

}  // namespace frankno
