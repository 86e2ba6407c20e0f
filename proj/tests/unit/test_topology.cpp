#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "frankno/error.hpp"
#include "frankno/topology.hpp"
#include "named_graphs.hpp"

using namespace frankno;
namespace ts = frankno::testsupport;

namespace {

bool fails_with(errc kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("edge connectivity thresholds") {
  CHECK(edge_connectivity_at_least(ts::complete_graph(4), 3));
  CHECK_FALSE(edge_connectivity_at_least(ts::petersen(), 4));
  CHECK(edge_connectivity_at_least(ts::petersen(), 3));
  // A degree-2 vertex bounds the edge connectivity.
  CHECK_FALSE(edge_connectivity_at_least(ts::cycle_graph(5), 3));
  // Disconnected graphs fail k >= 1.
  Graph two_triangles = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(edge_connectivity_at_least(two_triangles, 1));
  CHECK(edge_connectivity_at_least(two_triangles, 0));
}

TEST_CASE("cyclic edge cut detection") {
  Graph p = ts::petersen();
  CHECK_FALSE(is_cyclic_edge_cut(p, {}));
  // A vertex star separates a single vertex: no cycle on that side.
  EdgeSet star(p.incident(0).begin(), p.incident(0).end());
  std::sort(star.begin(), star.end());
  CHECK_FALSE(is_cyclic_edge_cut(p, star));

  Graph b = ts::two_k4_bridge();
  int bridge = b.edge_index(4, 9);
  REQUIRE(bridge >= 0);
  CHECK(is_cyclic_edge_cut(b, {bridge}));
  // Two of the subdivision vertex's edges also form a cyclic 2-cut.
  EdgeSet two = {b.edge_index(2, 4), b.edge_index(3, 4)};
  std::sort(two.begin(), two.end());
  CHECK(is_cyclic_edge_cut(b, two));
}

TEST_CASE("cyclic edge connectivity thresholds") {
  CHECK(cyclic_edge_connectivity_at_least(ts::petersen(), 4));
  CHECK(cyclic_edge_connectivity_at_least(ts::petersen(), 5));
  // No two vertex-disjoint cycles: vacuously passes every threshold.
  CHECK(cyclic_edge_connectivity_at_least(ts::complete_graph(4), 3));
  CHECK(cyclic_edge_connectivity_at_least(ts::complete_graph(4), 5));
  CHECK(cyclic_edge_connectivity_at_least(ts::complete_bipartite(3, 3), 5));
  // The prism's three rungs separate its two triangles.
  CHECK(cyclic_edge_connectivity_at_least(ts::prism(), 3));
  CHECK_FALSE(cyclic_edge_connectivity_at_least(ts::prism(), 4));
  CHECK_FALSE(cyclic_edge_connectivity_at_least(ts::two_k4_bridge(), 3));
  CHECK(fails_with(errc::precondition_violated, [] {
    cyclic_edge_connectivity_at_least(ts::petersen(), 6);
  }));
}

TEST_CASE("smoothing an edge of K4 collides with an existing edge") {
  CHECK(fails_with(errc::suppression_creates_parallel,
                   [] { smooth_edge(ts::complete_graph(4), 0); }));
}

TEST_CASE("smoothing any petersen edge yields a cubic 8-vertex graph") {
  Graph p = ts::petersen();
  for (int e = 0; e < p.m(); ++e) {
    SmoothResult r = smooth_edge(p, e);
    CHECK(r.graph.n() == 8);
    CHECK(r.graph.m() == 12);
    CHECK(r.graph.is_cubic());
    CHECK(edge_connectivity_at_least(r.graph, 1));
    // Mapping invariants: surviving edges map onto their new position, and
    // every new edge's path walks existing old edges between mapped ends.
    for (int oe = 0; oe < p.m(); ++oe) {
      if (oe == e) {
        CHECK(r.old_to_new_edge[oe] == -1);
        continue;
      }
      int ne = r.old_to_new_edge[oe];
      REQUIRE(ne >= 0);
      CHECK(!r.edge_paths[ne].empty());
    }
    for (int ne = 0; ne < r.graph.m(); ++ne) {
      const auto& path = r.edge_paths[ne];
      REQUIRE(path.size() >= 2);
      CHECK(r.old_to_new_vertex[path.front()] == r.graph.edge(ne).u);
      CHECK(r.old_to_new_vertex[path.back()] == r.graph.edge(ne).v);
      for (size_t i = 0; i + 1 < path.size(); ++i)
        CHECK(p.edge_index(path[i], path[i + 1]) >= 0);
    }
  }
}

TEST_CASE("smoothing one cube edge gives a 6-vertex cubic graph") {
  SmoothResult r = smooth_edge(ts::cube_q3(), 0);
  CHECK(r.graph.n() == 6);
  CHECK(r.graph.is_cubic());
}

TEST_CASE("bridge surgery is inverse to smoothing the new edge") {
  Graph g = ts::petersen();
  // Two independent edges.
  int e1 = 0;
  const Edge& a = g.edge(e1);
  int e2 = -1;
  for (int e = 1; e < g.m() && e2 < 0; ++e) {
    const Edge& b = g.edge(e);
    if (b.u != a.u && b.u != a.v && b.v != a.u && b.v != a.v) e2 = e;
  }
  REQUIRE(e2 >= 0);
  SurgeryResult sr = subdivide_and_connect(g, BridgeSurgery{e1, e2});
  CHECK(sr.graph.n() == 12);
  CHECK(sr.graph.is_cubic());
  int bridge = sr.graph.edge_index(sr.x1, sr.x2);
  REQUIRE(bridge >= 0);
  SmoothResult back = smooth_edge(sr.graph, bridge);
  CHECK(back.graph == g);  // new vertices had the top two ids
}

TEST_CASE("path surgery builds the 14-vertex graph from a matching triple") {
  Graph g = ts::petersen();
  // Perfect matchings of the Petersen graph: take any three pairwise
  // independent edges from one.
  std::vector<EdgeSet> pm = enumerate_perfect_matchings(g);
  REQUIRE(!pm.empty());
  const EdgeSet& f = pm[0];
  SurgeryResult sr =
      subdivide_and_connect(g, PathSurgery{f[0], f[1], f[2], true});
  CHECK(sr.graph.n() == 14);
  CHECK(sr.graph.is_cubic());
  CHECK(sr.graph.has_edge(sr.x1, sr.y1));
  CHECK(sr.graph.has_edge(sr.x2, sr.y2));
  CHECK_FALSE(sr.graph.has_edge(sr.x1, sr.x2));

  CHECK(fails_with(errc::adjacent_edges, [&] {
    subdivide_and_connect(g, BridgeSurgery{g.incident(0)[0], g.incident(0)[1]});
  }));
}

TEST_CASE("perfect matching enumeration counts") {
  CHECK(enumerate_perfect_matchings(ts::complete_graph(4)).size() == 3);
  CHECK(enumerate_perfect_matchings(ts::petersen()).size() == 6);
  CHECK(enumerate_perfect_matchings(ts::cycle_graph(5)).empty());
  // Deterministic order: every matching contains an edge at vertex 0, and the
  // stream is sorted by that first branching choice.
  auto pms = enumerate_perfect_matchings(ts::cube_q3());
  CHECK(pms.size() == 9);
  for (size_t i = 1; i < pms.size(); ++i) CHECK(pms[i - 1] < pms[i]);
}

TEST_CASE("two-factor decomposition") {
  Graph k4 = ts::complete_graph(4);
  auto pms = enumerate_perfect_matchings(k4);
  for (const auto& f : pms) {
    TwoFactor tf = two_factor(k4, f);
    REQUIRE(tf.circuits.size() == 1);
    CHECK(tf.circuits[0].size() == 4);
    CHECK(tf.odd_circuit_indices.empty());
  }
  Graph p = ts::petersen();
  for (const auto& f : enumerate_perfect_matchings(p)) {
    TwoFactor tf = two_factor(p, f);
    REQUIRE(tf.circuits.size() == 2);
    CHECK(tf.circuits[0].size() == 5);
    CHECK(tf.circuits[1].size() == 5);
    CHECK(tf.odd_circuit_indices.size() == 2);
  }
  // The prism's rung matching leaves the two triangles.
  Graph pr = ts::prism();
  EdgeSet rungs = {pr.edge_index(0, 3), pr.edge_index(1, 4), pr.edge_index(2, 5)};
  std::sort(rungs.begin(), rungs.end());
  TwoFactor tf = two_factor(pr, rungs);
  REQUIRE(tf.circuits.size() == 2);
  CHECK(tf.odd_circuit_indices.size() == 2);

  CHECK(fails_with(errc::not_perfect_matching,
                   [&] { two_factor(pr, {0, 1}); }));
}

TEST_CASE("three-edge-colouring existence and properness") {
  auto check_proper = [](const Graph& g, const std::vector<int>& col) {
    for (int v = 0; v < g.n(); ++v) {
      std::set<int> seen;
      for (int e : g.incident(v)) {
        CHECK(col[e] >= 0);
        CHECK(col[e] < 3);
        CHECK(seen.insert(col[e]).second);
      }
    }
  };
  for (const Graph& g : {ts::complete_graph(4), ts::complete_bipartite(3, 3),
                         ts::prism(), ts::cube_q3()}) {
    auto col = three_edge_colouring(g);
    REQUIRE(col.has_value());
    check_proper(g, *col);
  }
  CHECK_FALSE(three_edge_colouring(ts::petersen()).has_value());
  CHECK_FALSE(three_edge_colouring(ts::flower_snark(5)).has_value());
  CHECK_FALSE(three_edge_colouring(ts::flower_snark(7)).has_value());
  CHECK(fails_with(errc::not_cubic,
                   [] { three_edge_colouring(ts::cycle_graph(4)); }));
}

TEST_CASE("three-edge-colouring returns the lexicographically first solution") {
  // Brute-force the lexicographically smallest proper colouring of the prism
  // and compare.
  Graph g = ts::prism();
  std::vector<int> best;
  std::vector<int> cur(g.m(), 0);
  std::function<bool(int)> rec = [&](int e) -> bool {
    if (e == g.m()) return true;
    for (int c = 0; c < 3; ++c) {
      cur[e] = c;
      bool ok = true;
      for (int v : {g.edge(e).u, g.edge(e).v})
        for (int e2 : g.incident(v))
          if (e2 < e && cur[e2] == c) ok = false;
      if (ok && rec(e + 1)) return true;
    }
    return false;
  };
  REQUIRE(rec(0));
  best = cur;
  auto col = three_edge_colouring(g);
  REQUIRE(col.has_value());
  CHECK(*col == best);
}

TEST_CASE("oddness of small graphs") {
  CHECK(oddness(ts::complete_graph(4)) == 0);
  CHECK(oddness(ts::prism()) == 0);
  CHECK(oddness(ts::cube_q3()) == 0);
  CHECK(oddness(ts::petersen()) == 2);
  CHECK(oddness(ts::flower_snark(5)) == 2);
}

TEST_CASE("strong snark detection") {
  CHECK_FALSE(is_strong_snark(ts::petersen()));
  CHECK(fails_with(errc::not_snark,
                   [] { is_strong_snark(ts::complete_graph(4)); }));
}

TEST_CASE("local cubic modification on the 4-wheel hub yields the cube") {
  // W4 has no two vertex-disjoint cycles, so it is vacuously cyclically
  // 4-edge-connected and the construction applies at the degree-4 hub.
  Graph w = ts::wheel(4);
  Graph r = local_cubic_modification(w, 0);
  CHECK(r.n() == 8);
  CHECK(r.is_cubic());
  CHECK(edge_connectivity_at_least(r, 3));
  CHECK(cyclic_edge_connectivity_at_least(r, 4));
  CHECK_FALSE(cyclic_edge_connectivity_at_least(r, 5));
}

TEST_CASE("local cubic modification of K5, once and exhaustively") {
  Graph k5 = ts::complete_graph(5);
  Graph once = local_cubic_modification(k5, 4);
  CHECK(once.n() == 8);
  CHECK(edge_connectivity_at_least(once, 3));
  CHECK(cyclic_edge_connectivity_at_least(once, 4));

  // Repeatedly modify the lowest high-degree vertex until cubic.
  Graph h = k5;
  for (int rounds = 0; rounds < 10 && !h.is_cubic(); ++rounds) {
    int v = -1;
    for (int u = 0; u < h.n() && v < 0; ++u)
      if (h.degree(u) >= 4) v = u;
    REQUIRE(v >= 0);
    h = local_cubic_modification(h, v);
  }
  InstanceClass c = classify(h);
  CHECK(c.is_cubic);
  CHECK(c.is_3_edge_connected);
  CHECK(c.is_cyclically_4_edge_connected);

  CHECK(fails_with(errc::degree_too_small,
                   [] { local_cubic_modification(ts::petersen(), 0); }));
  // Two triangles sharing a vertex: degree-4 hub but only 2-edge-connected.
  Graph shared = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(fails_with(errc::precondition_violated,
                   [&] { local_cubic_modification(shared, 2); }));
}

TEST_CASE("classification flags for reference graphs") {
  InstanceClass p = classify(ts::petersen());
  CHECK(p.is_cubic);
  CHECK(p.is_connected);
  CHECK(p.is_3_edge_connected);
  CHECK(p.is_cyclically_4_edge_connected);
  REQUIRE(p.is_3_edge_colourable.has_value());
  CHECK_FALSE(*p.is_3_edge_colourable);

  InstanceClass k4 = classify(ts::complete_graph(4));
  CHECK(k4.is_cubic);
  CHECK(k4.is_3_edge_connected);
  REQUIRE(k4.is_3_edge_colourable.has_value());
  CHECK(*k4.is_3_edge_colourable);

  InstanceClass p2 = classify(ts::path_graph(2));
  CHECK_FALSE(p2.is_cubic);
  CHECK_FALSE(p2.is_3_edge_connected);
  CHECK_FALSE(p2.is_3_edge_colourable.has_value());
}
