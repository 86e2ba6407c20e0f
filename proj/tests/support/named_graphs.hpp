#pragma once

#include <vector>

#include "frankno/graph.hpp"

// Hand-built reference graphs used across the test suites.  Each constructor
// is a definition independent of the library's parsers so tests can
// cross-check encodings against first principles.
namespace frankno::testsupport {

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Kneser graph K(5,2): vertices are the 2-subsets of {0..4} in lexicographic
// order, adjacent iff disjoint.
Graph petersen();

// Triangular prism C3 x K2 and the 3-cube C4 x K2.
Graph prism();
Graph cube_q3();

// Wheel: hub 0 joined to a rim cycle 1..n.
Graph wheel(int rim);

// Isaacs flower snark J_k for odd k >= 3: star centres c_i with tips
// x_i, y_i, z_i; x-tips form a k-cycle; y- and z-tips form a 2k-cycle closed
// with a cross.
Graph flower_snark(int k);

// Two copies of K4, one edge of each subdivided, the subdivision vertices
// joined by an edge: 10 vertices, cubic, with small cyclic edge cuts.
Graph two_k4_bridge();

// Circular ladder CL_k = C_k x K2: rim 0..k-1, rim k..2k-1, rungs (i, k+i).
Graph circular_ladder(int k);

}  // namespace frankno::testsupport
