#include "frankno/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <utility>
#include <vector>

#include "frankno/error.hpp"

namespace frankno {
namespace {

int out_degree(const SearchState& s, int v) {
  const Graph& g = *s.graph;
  int c = 0;
  for (int e : g.incident(v))
    if (s.partial.oriented(e) && s.partial.tail(g, e) == v) ++c;
  return c;
}

int in_degree(const SearchState& s, int v) {
  const Graph& g = *s.graph;
  int c = 0;
  for (int e : g.incident(v))
    if (s.partial.oriented(e) && s.partial.head(g, e) == v) ++c;
  return c;
}

int unoriented_at(const SearchState& s, int v) {
  for (int e : s.graph->incident(v))
    if (!s.partial.oriented(e)) return e;
  return -1;
}

}  // namespace

SearchState make_search_state(const Graph& g, const EdgeSet& d) {
  SearchState s;
  s.graph = &g;
  s.d = d;
  s.in_d.assign(g.m(), 0);
  for (int e : d) s.in_d[e] = 1;
  s.partial = PartialOrientation(g.m());
  return s;
}

bool can_add_arc(const SearchState& s, int u, int v) {
  const Graph& g = *s.graph;
  const int e = g.edge_index(u, v);
  if (e < 0)
    raise(errc::precondition_violated, "arc endpoints are not adjacent");
  if (out_degree(s, u) >= 2 || in_degree(s, v) >= 2) return false;
  if (s.in_d[e]) {
    // A second deletable edge leaving u or entering v would leave the third
    // edge at that vertex as the lone-direction edge, which is never
    // deletable in the completed orientation.
    for (int ex : g.incident(u))
      if (s.in_d[ex] && s.partial.oriented(ex) && s.partial.tail(g, ex) == u)
        return false;
    for (int ex : g.incident(v))
      if (s.in_d[ex] && s.partial.oriented(ex) && s.partial.head(g, ex) == v)
        return false;
  } else {
    // An edge missed by the reference orientation must be deletable here, so
    // it cannot occupy the lone-direction slot at either endpoint, and two
    // such edges sharing a vertex must both enter or both leave it.
    if (in_degree(s, u) >= 2 || out_degree(s, v) >= 2) return false;
    for (int ex : g.incident(u))
      if (!s.in_d[ex] && s.partial.oriented(ex) && s.partial.head(g, ex) == u)
        return false;
    for (int ex : g.incident(v))
      if (!s.in_d[ex] && s.partial.oriented(ex) && s.partial.tail(g, ex) == v)
        return false;
  }
  return true;
}

bool add_arcs_recursively(SearchState& s, int u, int v) {
  const Graph& g = *s.graph;
  const int e = g.edge_index(u, v);
  if (e < 0)
    raise(errc::precondition_violated, "arc endpoints are not adjacent");
  if (s.partial.oriented(e)) return s.partial.tail(g, e) == u;
  if (!can_add_arc(s, u, v)) return false;
  s.partial.orient_toward(g, e, v);
  ++s.propagations;

  // An endpoint saturated in one direction forces its last free edge.
  if (out_degree(s, u) == 2 && in_degree(s, u) == 0) {
    const int ux = unoriented_at(s, u);
    if (ux >= 0 && !add_arcs_recursively(s, g.other_end(ux, u), u))
      return false;
  }
  if (in_degree(s, v) == 2 && out_degree(s, v) == 0) {
    const int vx = unoriented_at(s, v);
    if (vx >= 0 && !add_arcs_recursively(s, v, g.other_end(vx, v)))
      return false;
  }

  if (s.in_d[e]) {
    // Any other deletable edge at u must point into u, at v out of v;
    // otherwise one endpoint would pair two deletable edges on one side.
    for (int ex : g.incident(u)) {
      if (ex == e || !s.in_d[ex]) continue;
      if (!add_arcs_recursively(s, g.other_end(ex, u), u)) return false;
    }
    for (int ex : g.incident(v)) {
      if (ex == e || !s.in_d[ex]) continue;
      if (!add_arcs_recursively(s, v, g.other_end(ex, v))) return false;
    }
    // When both other edges at an endpoint are non-deletable they must form
    // the paired sides: both into u, respectively both out of v.
    bool other_d_at_u = false, other_d_at_v = false;
    for (int ex : g.incident(u))
      if (ex != e && s.in_d[ex]) other_d_at_u = true;
    for (int ex : g.incident(v))
      if (ex != e && s.in_d[ex]) other_d_at_v = true;
    if (!other_d_at_u)
      for (int ex : g.incident(u))
        if (ex != e && !add_arcs_recursively(s, g.other_end(ex, u), u))
          return false;
    if (!other_d_at_v)
      for (int ex : g.incident(v))
        if (ex != e && !add_arcs_recursively(s, v, g.other_end(ex, v)))
          return false;
  } else {
    // u already has one arc in and one out: the committed edge consumed the
    // free side, so the remaining edge must leave u (it has to stay
    // deletable); symmetrically at v.
    if (in_degree(s, u) == 1 && out_degree(s, u) == 1) {
      const int ux = unoriented_at(s, u);
      if (ux >= 0 && !add_arcs_recursively(s, u, g.other_end(ux, u)))
        return false;
    }
    if (in_degree(s, v) == 1 && out_degree(s, v) == 1) {
      const int vx = unoriented_at(s, v);
      if (vx >= 0 && !add_arcs_recursively(s, g.other_end(vx, v), v))
        return false;
    }
    // Non-deletable edges sharing a vertex must both enter or both leave it.
    for (int ex : g.incident(u)) {
      if (ex == e || s.in_d[ex]) continue;
      if (!add_arcs_recursively(s, u, g.other_end(ex, u))) return false;
    }
    for (int ex : g.incident(v)) {
      if (ex == e || s.in_d[ex]) continue;
      if (!add_arcs_recursively(s, g.other_end(ex, v), v)) return false;
    }
  }
  return true;
}

std::optional<Orientation> complete_orientation(SearchState& s) {
  const Graph& g = *s.graph;
  if (s.partial.complete()) {
    const Orientation o = s.partial.to_orientation();
    const EdgeSet dd = deletable_edges(g, o);
    std::vector<char> covered = s.in_d;
    for (int e : dd) covered[e] = 1;
    for (int e = 0; e < g.m(); ++e)
      if (!covered[e]) return std::nullopt;
    return o;
  }
  ++s.nodes;
  if (s.node_budget > 0 && s.nodes > s.node_budget)
    raise(errc::budget_exceeded, "search node budget exhausted");
  if (s.timed && (s.nodes & 1023) == 0 &&
      std::chrono::steady_clock::now() >= s.deadline)
    raise(errc::budget_exceeded, "time budget exhausted");
  // Branch on the unoriented edge with the most oriented neighbouring edges.
  int best = -1, best_cnt = -1;
  for (int e = 0; e < g.m(); ++e) {
    if (s.partial.oriented(e)) continue;
    int cnt = 0;
    const Edge& ed = g.edge(e);
    for (int ex : g.incident(ed.u))
      if (ex != e && s.partial.oriented(ex)) ++cnt;
    for (int ex : g.incident(ed.v))
      if (ex != e && s.partial.oriented(ex)) ++cnt;
    if (cnt > best_cnt) {
      best_cnt = cnt;
      best = e;
    }
  }
  const Edge& ed = g.edge(best);
  const PartialOrientation saved = s.partial;
  if (add_arcs_recursively(s, ed.u, ed.v)) {
    if (auto r = complete_orientation(s)) return r;
  }
  s.partial = saved;
  if (add_arcs_recursively(s, ed.v, ed.u)) {
    if (auto r = complete_orientation(s)) return r;
  }
  s.partial = saved;
  return std::nullopt;
}

ExactResult exact_frank2(const Graph& g, const ExactOptions& options) {
  if (!g.is_cubic())
    raise(errc::precondition_violated, "exact search requires a cubic graph");
  if (!edge_connectivity_at_least(g, 3))
    raise(errc::precondition_violated,
          "exact search requires 3-edge-connectivity");
  const int m = g.m();
  ExactResult result;
  const bool timed = options.timeout_ms > 0;
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(options.timeout_ms);
  auto consumed = [&]() {
    return result.stats.orientations_scanned + result.stats.nodes;
  };

  Orientation outer(m);  // all forward; edge 0 stays fixed throughout
  std::vector<int> indeg(g.n(), 0), outdeg(g.n(), 0);
  for (int e = 0; e < m; ++e) {
    ++outdeg[g.edge(e).u];
    ++indeg[g.edge(e).v];
  }
  auto vertex_ok = [&](int v) { return indeg[v] > 0 && outdeg[v] > 0; };
  int bad = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!vertex_ok(v)) ++bad;

  const unsigned long long total = m - 1 >= 63 ? ~0ull : (1ull << (m - 1));
  for (unsigned long long k = 0;; ++k) {
    ++result.stats.orientations_scanned;
    if (options.max_nodes > 0 && consumed() > options.max_nodes)
      raise(errc::budget_exceeded, "orientation scan budget exhausted");
    if (timed && (k & 4095) == 0 &&
        std::chrono::steady_clock::now() >= deadline)
      raise(errc::budget_exceeded, "time budget exhausted");

    if (bad == 0 && is_strong(g, outer)) {
      ++result.stats.strong_orientations;
      const EdgeSet d = deletable_edges(g, outer);
      std::vector<char> seen(g.n(), 0);
      for (int e : d) {
        seen[g.edge(e).u] = 1;
        seen[g.edge(e).v] = 1;
      }
      bool every_vertex = true;
      for (int v = 0; v < g.n() && every_vertex; ++v)
        every_vertex = seen[v] != 0;
      if (every_vertex) {
        ++result.stats.searches_run;
        SearchState s = make_search_state(g, d);
        if (options.max_nodes > 0) s.node_budget = options.max_nodes - consumed();
        s.timed = timed;
        s.deadline = deadline;
        std::optional<Orientation> partner;
        if (add_arcs_recursively(s, g.edge(0).u, g.edge(0).v))
          partner = complete_orientation(s);
        result.stats.nodes += s.nodes;
        result.stats.propagations += s.propagations;
        if (partner) {
          FrankCertificate cert;
          cert.method = "exact";
          cert.orientations = {outer, *partner};
          cert.deletable = {d, deletable_edges(g, *partner)};
          if (!verify_certificate(g, cert).ok)
            raise(errc::internal_contradiction,
                  "exact search produced a non-verifying certificate");
          result.frank2 = true;
          result.certificate = std::move(cert);
          return result;
        }
      }
    }

    if (k + 1 >= total) break;
    // Gray step: flip the edge addressed by the lowest set bit of k+1, so
    // exactly one arc changes and the degree screen updates in O(1).
    const int e = 1 + std::countr_zero(k + 1);
    const Edge& ed = g.edge(e);
    const bool before_u = vertex_ok(ed.u), before_v = vertex_ok(ed.v);
    if (!outer.reversed(e)) {
      --outdeg[ed.u];
      --indeg[ed.v];
      ++indeg[ed.u];
      ++outdeg[ed.v];
      outer.set_reversed(e, true);
    } else {
      --indeg[ed.u];
      --outdeg[ed.v];
      ++outdeg[ed.u];
      ++indeg[ed.v];
      outer.set_reversed(e, false);
    }
    bad += static_cast<int>(!vertex_ok(ed.u)) - static_cast<int>(!before_u);
    bad += static_cast<int>(!vertex_ok(ed.v)) - static_cast<int>(!before_v);
  }
  return result;
}

}  // namespace frankno
