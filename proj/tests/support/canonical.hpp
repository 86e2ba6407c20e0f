#pragma once

#include <string>

#include "frankno/graph.hpp"

namespace frankno::testsupport {

// Canonical form of a simple graph under isomorphism, as a string.  Two graphs
// receive the same signature iff they are isomorphic, and the signature
// encodes the vertex count and one concrete adjacency matrix, so a graph can
// be reconstructed from it.  Computed by colour refinement with
// individualisation; the search is pruned by an isomorphism-invariant child
// score, so the chosen leaf depends only on the isomorphism class.  Intended
// for the small graphs used in tests (n up to a few dozen).
std::string canonical_signature(const Graph& g);

// Equality of isomorphism classes via signatures.
bool isomorphic(const Graph& a, const Graph& b);

// The graph relabelled with the canonical vertex order (its adjacency string
// is the signature's bit part).
Graph canonical_copy(const Graph& g);

}  // namespace frankno::testsupport
