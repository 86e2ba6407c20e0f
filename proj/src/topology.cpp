#include "frankno/topology.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

#include "frankno/error.hpp"

namespace frankno {

bool edgeset_contains(const EdgeSet& s, int e) {
  return std::binary_search(s.begin(), s.end(), e);
}

namespace {

// Connected components of G - removed; returns component id per vertex and
// the component count.  Vertices of an empty graph get no component.
int components(const Graph& g, const std::vector<char>& edge_removed,
               std::vector<int>& comp) {
  comp.assign(g.n(), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      const auto& inc = g.incident(v);
      const auto& nbr = g.neighbors(v);
      for (size_t i = 0; i < inc.size(); ++i) {
        if (edge_removed[inc[i]]) continue;
        int w = nbr[i];
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

bool edge_connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.n() <= 1) return true;  // no cut separates fewer than two vertices
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) < k) return false;  // vertex star is a cut

  // Unit-capacity max-flow from vertex 0 to every other vertex, stopping at k
  // augmenting paths.  flow[e] in {-1,0,1} is relative to the stored (u,v).
  std::vector<int> flow(g.m());
  std::vector<int> via_edge(g.n());
  std::vector<int> prev(g.n());
  std::vector<int> queue;
  for (int t = 1; t < g.n(); ++t) {
    std::fill(flow.begin(), flow.end(), 0);
    int value = 0;
    while (value < k) {
      std::fill(prev.begin(), prev.end(), -2);
      prev[0] = -1;
      queue.assign(1, 0);
      for (size_t qi = 0; qi < queue.size() && prev[t] == -2; ++qi) {
        int v = queue[qi];
        const auto& inc = g.incident(v);
        const auto& nbr = g.neighbors(v);
        for (size_t i = 0; i < inc.size(); ++i) {
          int e = inc[i], w = nbr[i];
          if (prev[w] != -2) continue;
          int dir = g.edge(e).u == v ? 1 : -1;  // +1 along stored direction
          if (flow[e] * dir >= 1) continue;     // saturated this way
          prev[w] = v;
          via_edge[w] = e;
          queue.push_back(w);
        }
      }
      if (prev[t] == -2) break;  // no augmenting path
      for (int v = t; v != 0; v = prev[v]) {
        int e = via_edge[v];
        flow[e] += g.edge(e).v == v ? 1 : -1;
      }
      ++value;
    }
    if (value < k) return false;
  }
  return true;
}

bool is_cyclic_edge_cut(const Graph& g, const EdgeSet& s) {
  std::vector<char> removed(g.m(), 0);
  for (int e : s) {
    if (e < 0 || e >= g.m())
      raise(errc::precondition_violated,
            "edge index " + std::to_string(e) + " out of range");
    removed[e] = 1;
  }
  std::vector<int> comp;
  int count = components(g, removed, comp);
  if (count < 2) return false;

  // Strip degree <= 1 vertices of G - s; whatever survives lies on a cycle.
  std::vector<int> deg(g.n(), 0);
  for (int e = 0; e < g.m(); ++e) {
    if (removed[e]) continue;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::vector<char> dead(g.n(), 0);
  std::vector<int> stack;
  for (int v = 0; v < g.n(); ++v)
    if (deg[v] <= 1) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (dead[v]) continue;
    dead[v] = 1;
    const auto& inc = g.incident(v);
    const auto& nbr = g.neighbors(v);
    for (size_t i = 0; i < inc.size(); ++i) {
      if (removed[inc[i]] || dead[nbr[i]]) continue;
      if (--deg[nbr[i]] <= 1) stack.push_back(nbr[i]);
    }
  }
  std::vector<char> comp_has_cycle(count, 0);
  int cyclic = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!dead[v] && !comp_has_cycle[comp[v]]) {
      comp_has_cycle[comp[v]] = 1;
      ++cyclic;
    }
  return cyclic >= 2;
}

bool cyclic_edge_connectivity_at_least(const Graph& g, int k) {
  if (k < 3 || k > 5)
    raise(errc::precondition_violated,
          "cyclic connectivity threshold k must be 3, 4 or 5, got " +
              std::to_string(k));
  const int m = g.m();
  EdgeSet s;
  // Enumerate all edge subsets of size 1 .. k-1.
  std::vector<int> idx;
  for (int size = 1; size < k; ++size) {
    if (size > m) break;
    idx.assign(size, 0);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      s.assign(idx.begin(), idx.end());
      if (is_cyclic_edge_cut(g, s)) return false;
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

SmoothResult smooth_edge(const Graph& g, int e) {
  if (!g.is_cubic()) raise(errc::not_cubic, "smoothing requires a cubic graph");
  if (e < 0 || e >= g.m())
    raise(errc::precondition_violated, "edge index out of range");
  const int x = g.edge(e).u, y = g.edge(e).v;
  int a = -1, b = -1, c = -1, d = -1;  // x's other neighbours a,b; y's c,d
  for (int w : g.neighbors(x))
    if (w != y) (a < 0 ? a : b) = w;
  for (int w : g.neighbors(y))
    if (w != x) (c < 0 ? c : d) = w;
  if (a == b)
    raise(errc::suppression_creates_loop,
          "both remaining neighbours of vertex " + std::to_string(x) +
              " coincide");
  if (c == d)
    raise(errc::suppression_creates_loop,
          "both remaining neighbours of vertex " + std::to_string(y) +
              " coincide");
  if (g.has_edge(a, b))
    raise(errc::suppression_creates_parallel,
          "suppressing vertex " + std::to_string(x) +
              " duplicates existing edge (" + std::to_string(a) + "," +
              std::to_string(b) + ")");
  if (g.has_edge(c, d))
    raise(errc::suppression_creates_parallel,
          "suppressing vertex " + std::to_string(y) +
              " duplicates existing edge (" + std::to_string(c) + "," +
              std::to_string(d) + ")");
  if ((std::min(a, b) == std::min(c, d)) && (std::max(a, b) == std::max(c, d)))
    raise(errc::suppression_creates_parallel,
          "the two merged edges coincide on (" + std::to_string(a) + "," +
              std::to_string(b) + ")");

  SmoothResult r;
  r.old_to_new_vertex.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (v == x || v == y) continue;
    r.old_to_new_vertex[v] = static_cast<int>(r.vertex_to_old.size());
    r.vertex_to_old.push_back(v);
  }
  std::vector<std::pair<int, int>> new_edges;
  for (int i = 0; i < g.m(); ++i) {
    const Edge& ed = g.edge(i);
    if (ed.u == x || ed.v == x || ed.u == y || ed.v == y) continue;
    new_edges.emplace_back(r.old_to_new_vertex[ed.u], r.old_to_new_vertex[ed.v]);
  }
  new_edges.emplace_back(r.old_to_new_vertex[a], r.old_to_new_vertex[b]);
  new_edges.emplace_back(r.old_to_new_vertex[c], r.old_to_new_vertex[d]);
  r.graph = Graph::from_edges(g.n() - 2, new_edges);

  r.old_to_new_edge.assign(g.m(), -1);
  r.edge_paths.assign(r.graph.m(), {});
  const int eab = r.graph.edge_index(r.old_to_new_vertex[a], r.old_to_new_vertex[b]);
  const int ecd = r.graph.edge_index(r.old_to_new_vertex[c], r.old_to_new_vertex[d]);
  for (int i = 0; i < g.m(); ++i) {
    const Edge& ed = g.edge(i);
    if (i == e) continue;
    if (ed.u == x || ed.v == x)
      r.old_to_new_edge[i] = eab;
    else if (ed.u == y || ed.v == y)
      r.old_to_new_edge[i] = ecd;
    else
      r.old_to_new_edge[i] =
          r.graph.edge_index(r.old_to_new_vertex[ed.u], r.old_to_new_vertex[ed.v]);
  }
  for (int j = 0; j < r.graph.m(); ++j) {
    const Edge& ed = r.graph.edge(j);
    int ou = r.vertex_to_old[ed.u], ov = r.vertex_to_old[ed.v];
    if (j == eab)
      r.edge_paths[j] = {ou, x, ov};
    else if (j == ecd)
      r.edge_paths[j] = {ou, y, ov};
    else
      r.edge_paths[j] = {ou, ov};
  }
  return r;
}

namespace {

void check_independent(const Graph& g, int e1, int e2, const char* label) {
  if (e1 < 0 || e1 >= g.m() || e2 < 0 || e2 >= g.m())
    raise(errc::precondition_violated, "edge index out of range");
  const Edge& a = g.edge(e1);
  const Edge& b = g.edge(e2);
  if (e1 == e2 || a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
    raise(errc::adjacent_edges, std::string(label) + ": edges " +
                                    std::to_string(e1) + " and " +
                                    std::to_string(e2) + " share a vertex");
}

}  // namespace

SurgeryResult subdivide_and_connect(const Graph& g, const BridgeSurgery& s) {
  check_independent(g, s.e1, s.e2, "bridge surgery");
  SurgeryResult r;
  r.x1 = g.n();
  r.x2 = g.n() + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.m(); ++i) {
    if (i == s.e1 || i == s.e2) continue;
    edges.emplace_back(g.edge(i).u, g.edge(i).v);
  }
  const Edge& a = g.edge(s.e1);
  const Edge& b = g.edge(s.e2);
  edges.emplace_back(a.u, r.x1);
  edges.emplace_back(r.x1, a.v);
  edges.emplace_back(b.u, r.x2);
  edges.emplace_back(r.x2, b.v);
  edges.emplace_back(r.x1, r.x2);
  r.graph = Graph::from_edges(g.n() + 2, edges);
  r.old_to_new_edge.assign(g.m(), -1);
  for (int i = 0; i < g.m(); ++i)
    if (i != s.e1 && i != s.e2)
      r.old_to_new_edge[i] = r.graph.edge_index(g.edge(i).u, g.edge(i).v);
  r.path_e1 = {a.u, r.x1, a.v};
  r.path_e2 = {b.u, r.x2, b.v};
  return r;
}

SurgeryResult subdivide_and_connect(const Graph& g, const PathSurgery& s) {
  check_independent(g, s.e1, s.e2, "path surgery");
  check_independent(g, s.e1, s.f, "path surgery");
  check_independent(g, s.e2, s.f, "path surgery");
  SurgeryResult r;
  r.x1 = g.n();
  r.x2 = g.n() + 1;
  r.y1 = g.n() + 2;
  r.y2 = g.n() + 3;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.m(); ++i) {
    if (i == s.e1 || i == s.e2 || i == s.f) continue;
    edges.emplace_back(g.edge(i).u, g.edge(i).v);
  }
  const Edge& a = g.edge(s.e1);
  const Edge& b = g.edge(s.e2);
  const Edge& f = g.edge(s.f);
  edges.emplace_back(a.u, r.x1);
  edges.emplace_back(r.x1, a.v);
  edges.emplace_back(b.u, r.x2);
  edges.emplace_back(r.x2, b.v);
  const int near_u = s.y1_at_f_u ? r.y1 : r.y2;
  const int near_v = s.y1_at_f_u ? r.y2 : r.y1;
  edges.emplace_back(f.u, near_u);
  edges.emplace_back(near_u, near_v);
  edges.emplace_back(near_v, f.v);
  edges.emplace_back(r.x1, r.y1);
  edges.emplace_back(r.x2, r.y2);
  r.graph = Graph::from_edges(g.n() + 4, edges);
  r.old_to_new_edge.assign(g.m(), -1);
  for (int i = 0; i < g.m(); ++i)
    if (i != s.e1 && i != s.e2 && i != s.f)
      r.old_to_new_edge[i] = r.graph.edge_index(g.edge(i).u, g.edge(i).v);
  r.path_e1 = {a.u, r.x1, a.v};
  r.path_e2 = {b.u, r.x2, b.v};
  r.path_f = {f.u, near_u, near_v, f.v};
  return r;
}

void for_each_perfect_matching(const Graph& g,
                               const std::function<bool(const EdgeSet&)>& visit) {
  if (g.n() % 2 != 0) return;
  std::vector<char> matched(g.n(), 0);
  EdgeSet chosen;
  bool stop = false;

  std::function<void()> rec = [&]() {
    if (stop) return;
    int u = -1;
    for (int v = 0; v < g.n(); ++v)
      if (!matched[v]) {
        u = v;
        break;
      }
    if (u < 0) {
      EdgeSet out = chosen;
      std::sort(out.begin(), out.end());
      if (!visit(out)) stop = true;
      return;
    }
    const auto& inc = g.incident(u);
    const auto& nbr = g.neighbors(u);
    for (size_t i = 0; i < inc.size() && !stop; ++i) {
      int w = nbr[i];
      if (matched[w]) continue;
      matched[u] = matched[w] = 1;
      chosen.push_back(inc[i]);
      rec();
      chosen.pop_back();
      matched[u] = matched[w] = 0;
    }
  };
  if (g.n() > 0) rec();
}

std::vector<EdgeSet> enumerate_perfect_matchings(const Graph& g) {
  std::vector<EdgeSet> out;
  for_each_perfect_matching(g, [&](const EdgeSet& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<std::vector<int>> circuit_decomposition(const Graph& g,
                                                    const EdgeSet& edges) {
  std::vector<char> in_set(g.m(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.m())
      raise(errc::precondition_violated,
            "edge index " + std::to_string(e) + " out of range");
    in_set[e] = 1;
  }
  // Collect, per vertex, its incident set edges; all degrees must be 0 or 2.
  std::vector<std::array<int, 2>> at(g.n(), {-1, -1});
  std::vector<int> deg(g.n(), 0);
  for (int e = 0; e < g.m(); ++e) {
    if (!in_set[e]) continue;
    for (int v : {g.edge(e).u, g.edge(e).v}) {
      if (deg[v] >= 2)
        raise(errc::not_circuit_decomposition,
              "vertex " + std::to_string(v) + " has degree > 2 in the subset");
      at[v][deg[v]++] = e;
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (deg[v] == 1)
      raise(errc::not_circuit_decomposition,
            "vertex " + std::to_string(v) + " has degree 1 in the subset");

  std::vector<std::vector<int>> circuits;
  std::vector<char> used(g.m(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (deg[s] != 2) continue;
    if (used[at[s][0]] || used[at[s][1]]) continue;
    // Walk the circuit through s, stepping first to the lower neighbour.
    int first =
        g.other_end(at[s][0], s) < g.other_end(at[s][1], s) ? at[s][0] : at[s][1];
    std::vector<int> circ;
    int v = s, e = first;
    do {
      circ.push_back(v);
      used[e] = 1;
      v = g.other_end(e, v);
      e = at[v][0] == e ? at[v][1] : at[v][0];
    } while (v != s);
    circuits.push_back(std::move(circ));
  }
  return circuits;
}

TwoFactor two_factor(const Graph& g, const EdgeSet& f) {
  if (!g.is_cubic()) raise(errc::not_cubic, "2-factors require a cubic graph");
  std::vector<char> in_f(g.m(), 0);
  std::vector<int> cover(g.n(), 0);
  for (int e : f) {
    if (e < 0 || e >= g.m())
      raise(errc::not_perfect_matching,
            "edge index " + std::to_string(e) + " out of range");
    if (in_f[e])
      raise(errc::not_perfect_matching, "duplicate edge " + std::to_string(e));
    in_f[e] = 1;
    ++cover[g.edge(e).u];
    ++cover[g.edge(e).v];
  }
  for (int v = 0; v < g.n(); ++v)
    if (cover[v] != 1)
      raise(errc::not_perfect_matching,
            "vertex " + std::to_string(v) + " covered " +
                std::to_string(cover[v]) + " times");

  TwoFactor tf;
  tf.matching = f;
  std::sort(tf.matching.begin(), tf.matching.end());
  EdgeSet complement;
  for (int e = 0; e < g.m(); ++e)
    if (!in_f[e]) complement.push_back(e);
  tf.circuits = circuit_decomposition(g, complement);
  for (size_t i = 0; i < tf.circuits.size(); ++i)
    if (tf.circuits[i].size() % 2 == 1)
      tf.odd_circuit_indices.push_back(static_cast<int>(i));
  return tf;
}

namespace {

// Backtracking proper 3-edge-colouring with forced-move propagation.  Branches
// always on the lowest-index uncoloured edge with colours tried in ascending
// order, so the first solution found is the lexicographically smallest; unit
// propagation only commits values implied by every extension of the current
// prefix, which preserves that order.
struct EdgeColouring {
  const Graph& g;
  std::vector<int> colour;        // -1 = uncoloured
  std::vector<int> vertex_used;   // bitmask of colours present at a vertex

  explicit EdgeColouring(const Graph& gr)
      : g(gr), colour(gr.m(), -1), vertex_used(gr.n(), 0) {}

  bool feasible(int e, int c) const {
    int bit = 1 << c;
    return !(vertex_used[g.edge(e).u] & bit) &&
           !(vertex_used[g.edge(e).v] & bit);
  }

  void set(int e, int c, std::vector<int>& trail) {
    colour[e] = c;
    vertex_used[g.edge(e).u] |= 1 << c;
    vertex_used[g.edge(e).v] |= 1 << c;
    trail.push_back(e);
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      int e = trail.back();
      trail.pop_back();
      int c = colour[e];
      colour[e] = -1;
      vertex_used[g.edge(e).u] &= ~(1 << c);
      vertex_used[g.edge(e).v] &= ~(1 << c);
    }
  }

  // Commits every edge whose colour is forced (a vertex with two coloured
  // edges determines its third).  Returns false on contradiction.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < g.n(); ++v) {
        if (vertex_used[v] == 7) continue;
        int unset = -1, count = 0;
        for (int e : g.incident(v))
          if (colour[e] < 0) {
            unset = e;
            ++count;
          }
        if (count != 1) continue;
        int missing = 7 & ~vertex_used[v];
        // With two of three edges coloured, exactly one colour is missing.
        if ((missing & (missing - 1)) != 0) continue;
        int c = missing == 1 ? 0 : missing == 2 ? 1 : 2;
        if (!feasible(unset, c)) return false;
        set(unset, c, trail);
        changed = true;
      }
    }
    return true;
  }

  bool solve() {
    std::vector<int> trail;
    return solve_inner(trail);
  }

  bool solve_inner(std::vector<int>& trail) {
    size_t mark = trail.size();
    if (!propagate(trail)) {
      undo(trail, mark);
      return false;
    }
    int e = -1;
    for (int i = 0; i < g.m(); ++i)
      if (colour[i] < 0) {
        e = i;
        break;
      }
    if (e < 0) return true;
    for (int c = 0; c < 3; ++c) {
      if (!feasible(e, c)) continue;
      size_t inner = trail.size();
      set(e, c, trail);
      if (solve_inner(trail)) return true;
      undo(trail, inner);
    }
    undo(trail, mark);
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> three_edge_colouring(const Graph& g) {
  if (!g.is_cubic())
    raise(errc::not_cubic, "3-edge-colouring requires a cubic graph");
  EdgeColouring ec(g);
  if (!ec.solve()) return std::nullopt;
  return ec.colour;
}

std::optional<int> oddness(const Graph& g) {
  if (!g.is_cubic()) raise(errc::not_cubic, "oddness requires a cubic graph");
  std::optional<int> best;
  for_each_perfect_matching(g, [&](const EdgeSet& f) {
    TwoFactor tf = two_factor(g, f);
    int odd = static_cast<int>(tf.odd_circuit_indices.size());
    if (!best || odd < *best) best = odd;
    return !(best && *best == 0);  // can't do better than 0
  });
  return best;
}

bool is_strong_snark(const Graph& g) {
  if (!g.is_cubic()) raise(errc::not_snark, "not cubic");
  if (three_edge_colouring(g)) raise(errc::not_snark, "graph is 3-edge-colourable");
  for (int e = 0; e < g.m(); ++e) {
    SmoothResult sm = smooth_edge(g, e);  // propagates parallel-edge collisions
    if (three_edge_colouring(sm.graph)) return false;
  }
  return true;
}

namespace {

// 2-edge-connected blocks of G - v and, per block, whether it is a leaf of
// the bridge forest (at most one incident bridge).  Returns for each leaf
// block the sorted list of v's neighbours inside it.
std::vector<std::vector<int>> leaf_block_neighbour_groups(const Graph& g, int v) {
  const int n = g.n();
  // DFS lowpoint bridge finding on G - v.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_bridge(g.m(), 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int pe) {
    disc[u] = low[u] = timer++;
    const auto& inc = g.incident(u);
    const auto& nbr = g.neighbors(u);
    for (size_t i = 0; i < inc.size(); ++i) {
      int e = inc[i], w = nbr[i];
      if (w == v || e == pe) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
      } else {
        dfs(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) is_bridge[e] = 1;
      }
    }
  };
  for (int u = 0; u < n; ++u)
    if (u != v && disc[u] < 0) dfs(u, -1);

  // Blocks = components of G - v - bridges.
  std::vector<int> block(n, -1);
  int nblocks = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (s == v || block[s] >= 0) continue;
    block[s] = nblocks;
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const auto& inc = g.incident(u);
      const auto& nbr = g.neighbors(u);
      for (size_t i = 0; i < inc.size(); ++i) {
        int e = inc[i], w = nbr[i];
        if (w == v || is_bridge[e] || block[w] >= 0) continue;
        block[w] = nblocks;
        stack.push_back(w);
      }
    }
    ++nblocks;
  }
  std::vector<int> bridge_count(nblocks, 0);
  for (int e = 0; e < g.m(); ++e)
    if (is_bridge[e]) {
      ++bridge_count[block[g.edge(e).u]];
      ++bridge_count[block[g.edge(e).v]];
    }
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<int>> by_block(nblocks);
  for (int w : g.neighbors(v)) by_block[block[w]].push_back(w);
  for (int b = 0; b < nblocks; ++b) {
    if (bridge_count[b] > 1) continue;  // interior block of the bridge forest
    std::sort(by_block[b].begin(), by_block[b].end());
    groups.push_back(by_block[b]);
  }
  return groups;
}

}  // namespace

Graph local_cubic_modification(const Graph& g, int v) {
  if (v < 0 || v >= g.n())
    raise(errc::precondition_violated, "vertex out of range");
  const int d = g.degree(v);
  if (d < 4)
    raise(errc::degree_too_small,
          "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
  if (!edge_connectivity_at_least(g, 3))
    raise(errc::precondition_violated, "graph is not 3-edge-connected");
  if (!cyclic_edge_connectivity_at_least(g, 4))
    raise(errc::precondition_violated,
          "graph is not cyclically 4-edge-connected");

  std::vector<std::vector<int>> groups = leaf_block_neighbour_groups(g, v);
  const int k = static_cast<int>(groups.size());
  // 3-edge-connectivity forces >= 2 edges from v into every leaf block.
  for (const auto& grp : groups)
    if (grp.size() < 2)
      raise(errc::internal_contradiction,
            "leaf block with fewer than two neighbours of the modified vertex");
  if (2 * k > d)
    raise(errc::internal_contradiction, "more leaf blocks than circuit slots");

  // Circuit position i and k+i (0-based) receive the two lowest neighbours of
  // leaf block i; remaining neighbours fill free positions in index order.
  std::vector<int> position_to_neighbour(d, -1);
  std::vector<char> neighbour_used(g.n(), 0);
  for (int i = 0; i < k; ++i) {
    position_to_neighbour[i] = groups[i][0];
    position_to_neighbour[k + i] = groups[i][1];
    neighbour_used[groups[i][0]] = neighbour_used[groups[i][1]] = 1;
  }
  std::vector<int> rest;
  for (int w : g.neighbors(v))
    if (!neighbour_used[w]) rest.push_back(w);
  std::sort(rest.begin(), rest.end());
  size_t ri = 0;
  for (int i = 0; i < d; ++i)
    if (position_to_neighbour[i] < 0) position_to_neighbour[i] = rest[ri++];

  // Relabel: old vertices except v keep their order, circuit takes the top d.
  std::vector<int> old_to_new(g.n(), -1);
  int next = 0;
  for (int u = 0; u < g.n(); ++u)
    if (u != v) old_to_new[u] = next++;
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == v || ed.v == v) continue;
    edges.emplace_back(old_to_new[ed.u], old_to_new[ed.v]);
  }
  const int base = g.n() - 1;
  for (int i = 0; i < d; ++i) {
    edges.emplace_back(base + i, base + (i + 1) % d);
    edges.emplace_back(base + i, old_to_new[position_to_neighbour[i]]);
  }
  return Graph::from_edges(g.n() - 1 + d, edges);
}

InstanceClass classify(const Graph& g) {
  InstanceClass c;
  c.is_cubic = g.is_cubic();
  c.is_connected = g.n() <= 1 || edge_connectivity_at_least(g, 1);
  c.is_3_edge_connected = edge_connectivity_at_least(g, 3);
  c.is_cyclically_4_edge_connected = cyclic_edge_connectivity_at_least(g, 4);
  if (c.is_cubic) c.is_3_edge_colourable = three_edge_colouring(g).has_value();
  return c;
}

}  // namespace frankno
