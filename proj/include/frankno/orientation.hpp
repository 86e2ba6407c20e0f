#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frankno/graph.hpp"
#include "frankno/topology.hpp"

namespace frankno {

// Total orientation of a graph's edge set.  Edge e with stored endpoints
// (u, v), u < v, is directed u->v when the bit is 0 and v->u when it is 1.
// Orientations are value types keyed to a graph's edge count; mixing a graph
// with a foreign orientation is detected by size mismatch.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(int m) : rev_(m, 0) {}

  int size() const { return static_cast<int>(rev_.size()); }
  bool reversed(int e) const { return rev_[e] != 0; }
  void set_reversed(int e, bool r) { rev_[e] = r ? 1 : 0; }
  int tail(const Graph& g, int e) const {
    return rev_[e] ? g.edge(e).v : g.edge(e).u;
  }
  int head(const Graph& g, int e) const {
    return rev_[e] ? g.edge(e).u : g.edge(e).v;
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.rev_ == b.rev_;
  }

 private:
  std::vector<uint8_t> rev_;
};

Orientation reverse(const Orientation& o);

// Strong connectivity of the oriented graph (single-vertex graphs count as
// strong).
bool is_strong(const Graph& g, const Orientation& o);

// Edge e = u->v is deletable iff a directed u->v path avoiding e exists,
// which is equivalent to the restriction to G - e being strong.
// Errors: not_strong if o is not a strong orientation.
bool is_deletable(const Graph& g, const Orientation& o, int e);

// All deletable edges of (g, o); the empty set when o is not strong.
EdgeSet deletable_edges(const Graph& g, const Orientation& o);

// Partial orientation used by the exact search.  States only move from unset
// to oriented within a branch; rollback is by restoring a saved copy.
class PartialOrientation {
 public:
  enum State : uint8_t { kUnset = 0, kForward = 1, kBackward = 2 };

  PartialOrientation() = default;
  explicit PartialOrientation(int m) : st_(m, kUnset) {}

  int size() const { return static_cast<int>(st_.size()); }
  State state(int e) const { return static_cast<State>(st_[e]); }
  bool oriented(int e) const { return st_[e] != kUnset; }
  int oriented_count() const { return count_; }
  bool complete() const { return count_ == size(); }

  // Directs edge e toward `head`, which must be one of its endpoints.
  void orient_toward(const Graph& g, int e, int head);
  int tail(const Graph& g, int e) const;  // pre: oriented(e)
  int head(const Graph& g, int e) const;  // pre: oriented(e)

  Orientation to_orientation() const;  // pre: complete()

 private:
  std::vector<uint8_t> st_;
  int count_ = 0;
};

// A claim that the listed orientations witness a Frank number bound: every
// edge must be deletable in at least one of them.  `deletable` carries the
// per-orientation sets the construction guarantees; verification recomputes
// everything from scratch.
struct FrankCertificate {
  std::string method;  // heuristic-2odd | heuristic-2odd1even | exact |
                       // flow-4flow | flow-6flow
  std::vector<Orientation> orientations;
  std::vector<EdgeSet> deletable;
};

struct VerifyReport {
  bool ok = false;
  int first_uncovered_edge = -1;  // set when coverage fails
  std::string reason;             // human-readable failure description
};

// Recomputes the deletable set of every orientation and checks that their
// union is E(G).  Stored sets are not trusted for coverage; they are audited
// against the recomputed sets (a stored claim of a non-deletable edge fails
// verification).
VerifyReport verify_certificate(const Graph& g, const FrankCertificate& c);

// JSON serialization: graph6 string, method, and per orientation a direction
// bit string in edge-index order ('0' = u->v for u < v) plus the claimed
// deletable indices.  Externally checkable against the graph6 edge indexing.
std::string certificate_to_json(const Graph& g, const FrankCertificate& c);
std::pair<Graph, FrankCertificate> certificate_from_json(const std::string& text);

}  // namespace frankno
