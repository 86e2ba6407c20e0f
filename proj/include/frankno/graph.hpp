#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frankno {

// An undirected edge; stored with u < v.
struct Edge {
  int u = -1;
  int v = -1;
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
};

// Immutable simple undirected graph.  Edges are indexed lexicographically by
// their (u, v) endpoint pair with u < v; every certificate and edge set in the
// library references edges through this indexing, so it is part of the
// external contract.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an arbitrary edge list.  Endpoints are normalised to
  // u < v and the list is sorted; loops, duplicate edges and out-of-range
  // endpoints are rejected (errc::precondition_violated).
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Incident edge indices of v, ascending; neighbors(v)[i] is the other end
  // of incident(v)[i].
  const std::vector<int>& incident(int v) const { return inc_[v]; }
  const std::vector<int>& neighbors(int v) const { return nbr_[v]; }
  int degree(int v) const { return static_cast<int>(inc_[v].size()); }

  int other_end(int e, int v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  // Index of edge {u, v}, or -1 if absent.
  int edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  bool is_cubic() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> inc_;
  std::vector<std::vector<int>> nbr_;
};

// --- graph6 codec -----------------------------------------------------------
//
// graph6 is the printable ASCII encoding of simple undirected graphs: a length
// field N(n) followed by the upper triangle of the adjacency matrix in
// column-major order, packed 6 bits per byte, each byte offset by 63.  An
// optional ">>graph6<<" header is tolerated and skipped.  Parse errors carry
// the byte offset of the offending character:
//   errc::malformed_length_field  - truncated/oversized length or data section
//   errc::char_out_of_range      - byte outside [63, 126]
//   errc::trailing_bits_nonzero  - padding bits of the last byte not all zero
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Classification flags driving the batch pipeline.  is_3_edge_colourable is
// only computed for cubic graphs and left unset otherwise.
struct InstanceClass {
  bool is_cubic = false;
  bool is_connected = false;
  bool is_3_edge_connected = false;
  bool is_cyclically_4_edge_connected = false;
  std::optional<bool> is_3_edge_colourable;
};

InstanceClass classify(const Graph& g);

}  // namespace frankno
