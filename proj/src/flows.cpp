#include "frankno/flows.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "frankno/error.hpp"

namespace frankno {

namespace {

void check_flow_shape(const Graph& g, size_t values, int orientation_size,
                      const char* what) {
  if (static_cast<int>(values) != g.m() || orientation_size != g.m()) {
    raise(errc::precondition_violated,
          std::string(what) + ": flow does not match the graph's edge count");
  }
}

// Splits an even-degree edge subset into edge-disjoint simple circuits.
// Deterministic: each walk starts at the lowest vertex that still has
// positive degree and always leaves along the lowest-index unused edge;
// extracted circuits are rotated to start at their lowest vertex while
// keeping the walk direction.
std::vector<std::vector<int>> peel_circuits(const Graph& g,
                                            std::vector<char> remaining) {
  const int n = g.n();
  const int m = g.m();
  std::vector<int> deg(static_cast<size_t>(n), 0);
  int edges_left = 0;
  for (int e = 0; e < m; ++e) {
    if (!remaining[static_cast<size_t>(e)]) continue;
    ++deg[static_cast<size_t>(g.edge(e).u)];
    ++deg[static_cast<size_t>(g.edge(e).v)];
    ++edges_left;
  }
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<size_t>(v)] % 2 != 0) {
      raise(errc::internal_contradiction,
            "circuit peeling needs even degrees, vertex " + std::to_string(v) +
                " has degree " + std::to_string(deg[static_cast<size_t>(v)]));
    }
  }

  std::vector<std::vector<int>> out;
  std::vector<int> pos(static_cast<size_t>(n), -1);
  std::vector<char> walk_used(static_cast<size_t>(m), 0);
  while (edges_left > 0) {
    int v0 = -1;
    for (int v = 0; v < n; ++v) {
      if (deg[static_cast<size_t>(v)] > 0) {
        v0 = v;
        break;
      }
    }
    std::vector<int> path{v0};
    std::vector<int> path_edges;
    pos[static_cast<size_t>(v0)] = 0;
    while (true) {
      const int v = path.back();
      int chosen = -1;
      int w = -1;
      const auto& inc = g.incident(v);
      const auto& nbr = g.neighbors(v);
      for (size_t i = 0; i < inc.size(); ++i) {
        const int e = inc[i];
        if (remaining[static_cast<size_t>(e)] &&
            !walk_used[static_cast<size_t>(e)]) {
          chosen = e;
          w = nbr[i];
          break;
        }
      }
      assert(chosen != -1);  // even remaining degrees keep the walk alive
      walk_used[static_cast<size_t>(chosen)] = 1;
      if (pos[static_cast<size_t>(w)] >= 0) {
        const int p = pos[static_cast<size_t>(w)];
        std::vector<int> circ(path.begin() + p, path.end());
        std::vector<int> circ_edges(path_edges.begin() + p, path_edges.end());
        circ_edges.push_back(chosen);
        for (int e : circ_edges) {
          remaining[static_cast<size_t>(e)] = 0;
          --deg[static_cast<size_t>(g.edge(e).u)];
          --deg[static_cast<size_t>(g.edge(e).v)];
          --edges_left;
        }
        const auto lowest = std::min_element(circ.begin(), circ.end());
        std::rotate(circ.begin(), lowest, circ.end());
        out.push_back(std::move(circ));
        for (int u : path) pos[static_cast<size_t>(u)] = -1;
        for (int e : path_edges) walk_used[static_cast<size_t>(e)] = 0;
        walk_used[static_cast<size_t>(chosen)] = 0;
        break;
      }
      path.push_back(w);
      path_edges.push_back(chosen);
      pos[static_cast<size_t>(w)] = static_cast<int>(path.size()) - 1;
    }
  }
  return out;
}

// Directs every wrap-around consecutive pair (a, b) of the circuit as a -> b.
void orient_along(const Graph& g, Orientation& o, const std::vector<int>& cyc) {
  for (size_t i = 0; i < cyc.size(); ++i) {
    const int a = cyc[i];
    const int b = cyc[(i + 1) % cyc.size()];
    const int e = g.edge_index(std::min(a, b), std::max(a, b));
    assert(e >= 0);
    o.set_reversed(e, a > b);
  }
}

// True iff {x, y, z} is exactly the edge set between some vertex bipartition:
// all three must join distinct components of g - {x, y, z} and the component
// quotient over these three edges must be bipartite.
bool is_three_edge_cut(const Graph& g, int x, int y, int z) {
  const int n = g.n();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] != -1) continue;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = ncomp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const auto& inc = g.incident(v);
      const auto& nbr = g.neighbors(v);
      for (size_t i = 0; i < inc.size(); ++i) {
        const int e = inc[i];
        if (e == x || e == y || e == z) continue;
        const int w = nbr[i];
        if (comp[static_cast<size_t>(w)] == -1) {
          comp[static_cast<size_t>(w)] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::array<std::pair<int, int>, 3> quotient_edges;
  int idx = 0;
  for (int e : {x, y, z}) {
    const int cu = comp[static_cast<size_t>(g.edge(e).u)];
    const int cv = comp[static_cast<size_t>(g.edge(e).v)];
    if (cu == cv) return false;  // cannot cross any bipartition
    quotient_edges[static_cast<size_t>(idx++)] = {cu, cv};
  }
  // Bipartite test of the quotient: all three edges must cross.
  std::vector<std::vector<int>> adj(static_cast<size_t>(ncomp));
  for (const auto& [p, q] : quotient_edges) {
    adj[static_cast<size_t>(p)].push_back(q);
    adj[static_cast<size_t>(q)].push_back(p);
  }
  std::vector<int> colour(static_cast<size_t>(ncomp), -1);
  for (int s = 0; s < ncomp; ++s) {
    if (colour[static_cast<size_t>(s)] != -1) continue;
    colour[static_cast<size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (colour[static_cast<size_t>(w)] == -1) {
          colour[static_cast<size_t>(w)] = 1 - colour[static_cast<size_t>(v)];
          stack.push_back(w);
        } else if (colour[static_cast<size_t>(w)] ==
                   colour[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Backtracking search for a nowhere-zero (Z2 x Zk)-flow, k in {2, 3}.  The
// first coordinate is orientation-free; the second is signed against the
// reference orientation (u -> v) when k = 3.  Branches on the lowest-index
// undetermined edge with a fixed value order and propagates forced values at
// vertices with exactly one undetermined incident edge, so the first solution
// found is the lexicographically smallest.
class GroupFlowSearch {
 public:
  GroupFlowSearch(const Graph& g, int second_modulus)
      : g_(g), mod_(second_modulus) {
    const size_t m = static_cast<size_t>(g.m());
    const size_t n = static_cast<size_t>(g.n());
    st_.dval.assign(m, 0);
    st_.tval.assign(m, 0);
    st_.done.assign(m, 0);
    st_.unset.assign(n, 0);
    st_.dsum.assign(n, 0);
    st_.tsum.assign(n, 0);
    st_.remaining = g.m();
    for (int v = 0; v < g.n(); ++v) {
      st_.unset[static_cast<size_t>(v)] = g.degree(v);
    }
  }

  bool run() {
    std::vector<int> work;
    for (int v = 0; v < g_.n(); ++v) {
      if (st_.unset[static_cast<size_t>(v)] == 1) work.push_back(v);
    }
    if (!drain(work)) return false;
    return search();
  }

  GroupFlow result(FlowGroup tag) const {
    GroupFlow out;
    out.group = tag;
    out.orientation = Orientation(g_.m());
    out.value.resize(static_cast<size_t>(g_.m()));
    for (int e = 0; e < g_.m(); ++e) {
      out.value[static_cast<size_t>(e)] = {st_.dval[static_cast<size_t>(e)],
                                           st_.tval[static_cast<size_t>(e)]};
    }
    return out;
  }

 private:
  struct State {
    std::vector<uint8_t> dval, tval;
    std::vector<char> done;
    std::vector<int> unset;
    std::vector<uint8_t> dsum;
    std::vector<int> tsum;
    int remaining = 0;
  };

  // Contribution of second-coordinate value t on edge e at endpoint v,
  // counting incoming as positive.
  int contribution(int e, int v, int t) const {
    if (mod_ == 2) return t & 1;
    return g_.edge(e).v == v ? t % 3 : (3 - t % 3) % 3;
  }

  bool assign(int e, int d, int t, std::vector<int>& work) {
    st_.done[static_cast<size_t>(e)] = 1;
    st_.dval[static_cast<size_t>(e)] = static_cast<uint8_t>(d);
    st_.tval[static_cast<size_t>(e)] = static_cast<uint8_t>(t);
    --st_.remaining;
    const Edge ed = g_.edge(e);
    for (int v : {ed.u, ed.v}) {
      st_.dsum[static_cast<size_t>(v)] ^= static_cast<uint8_t>(d);
      st_.tsum[static_cast<size_t>(v)] =
          (st_.tsum[static_cast<size_t>(v)] + contribution(e, v, t)) % mod_;
      const int left = --st_.unset[static_cast<size_t>(v)];
      if (left == 0) {
        if (st_.dsum[static_cast<size_t>(v)] != 0 ||
            st_.tsum[static_cast<size_t>(v)] != 0) {
          return false;
        }
      } else if (left == 1) {
        work.push_back(v);
      }
    }
    return true;
  }

  bool drain(std::vector<int>& work) {
    while (!work.empty()) {
      const int v = work.back();
      work.pop_back();
      if (st_.unset[static_cast<size_t>(v)] != 1) continue;
      int e = -1;
      for (int cand : g_.incident(v)) {
        if (!st_.done[static_cast<size_t>(cand)]) {
          e = cand;
          break;
        }
      }
      assert(e != -1);
      const int d = st_.dsum[static_cast<size_t>(v)];
      const int need = (mod_ - st_.tsum[static_cast<size_t>(v)]) % mod_;
      const int t =
          (mod_ == 2 || g_.edge(e).v == v) ? need : (3 - need) % 3;
      if (d == 0 && t == 0) return false;
      if (!assign(e, d, t, work)) return false;
    }
    return true;
  }

  bool search() {
    if (st_.remaining == 0) return true;
    int e0 = -1;
    for (int e = 0; e < g_.m(); ++e) {
      if (!st_.done[static_cast<size_t>(e)]) {
        e0 = e;
        break;
      }
    }
    static constexpr std::array<std::pair<int, int>, 3> kOrder2{
        {{0, 1}, {1, 0}, {1, 1}}};
    static constexpr std::array<std::pair<int, int>, 5> kOrder3{
        {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}};
    const std::pair<int, int>* begin =
        mod_ == 2 ? kOrder2.data() : kOrder3.data();
    const size_t count = mod_ == 2 ? kOrder2.size() : kOrder3.size();
    for (size_t i = 0; i < count; ++i) {
      const auto [d, t] = begin[i];
      State saved = st_;
      std::vector<int> work;
      if (assign(e0, d, t, work) && drain(work) && search()) return true;
      st_ = std::move(saved);
    }
    return false;
  }

  const Graph& g_;
  int mod_;
  State st_;
};

IntFlow subgraph_flow(int m, const Orientation& o, const std::vector<char>& in,
                      int value) {
  IntFlow fl;
  fl.orientation = o;
  fl.value.assign(static_cast<size_t>(m), 0);
  for (int e = 0; e < m; ++e) {
    if (in[static_cast<size_t>(e)]) fl.value[static_cast<size_t>(e)] = value;
  }
  return fl;
}

}  // namespace

bool verify_flow(const Graph& g, const IntFlow& fl, int* first_bad_vertex) {
  check_flow_shape(g, fl.value.size(), fl.orientation.size(), "verify_flow");
  for (int v = 0; v < g.n(); ++v) {
    long long net = 0;
    for (int e : g.incident(v)) {
      const int val = fl.value[static_cast<size_t>(e)];
      net += fl.orientation.head(g, e) == v ? val : -val;
    }
    if (net != 0) {
      if (first_bad_vertex) *first_bad_vertex = v;
      return false;
    }
  }
  return true;
}

bool verify_flow(const Graph& g, const GroupFlow& fl, int* first_bad_vertex) {
  check_flow_shape(g, fl.value.size(), fl.orientation.size(), "verify_flow");
  const int mod = fl.group == FlowGroup::z2xz2 ? 2 : 3;
  for (int v = 0; v < g.n(); ++v) {
    int first = 0;
    int second = 0;
    for (int e : g.incident(v)) {
      const auto& [d, t] = fl.value[static_cast<size_t>(e)];
      first ^= d & 1;
      if (mod == 2) {
        second ^= t & 1;
      } else {
        const int tv = t % 3;
        second = (second +
                  (fl.orientation.head(g, e) == v ? tv : (3 - tv) % 3)) %
                 3;
      }
    }
    if (first != 0 || second != 0) {
      if (first_bad_vertex) *first_bad_vertex = v;
      return false;
    }
  }
  return true;
}

bool is_nowhere_zero(const IntFlow& fl) {
  return std::all_of(fl.value.begin(), fl.value.end(),
                     [](int v) { return v != 0; });
}

bool is_nowhere_zero(const GroupFlow& fl) {
  return std::all_of(fl.value.begin(), fl.value.end(), [](const auto& p) {
    return p.first != 0 || p.second != 0;
  });
}

bool is_all_positive(const IntFlow& fl) {
  return std::all_of(fl.value.begin(), fl.value.end(),
                     [](int v) { return v > 0; });
}

IntFlow to_all_positive(const Graph& g, const IntFlow& fl) {
  check_flow_shape(g, fl.value.size(), fl.orientation.size(),
                   "to_all_positive");
  IntFlow out = fl;
  for (int e = 0; e < g.m(); ++e) {
    int& val = out.value[static_cast<size_t>(e)];
    if (val == 0) {
      raise(errc::zero_edge,
            "edge " + std::to_string(e) + " has value 0, cannot make positive");
    }
    if (val < 0) {
      val = -val;
      out.orientation.set_reversed(e, !out.orientation.reversed(e));
    }
  }
  return out;
}

IntFlow positive_combination(const Graph& g, const IntFlow& a,
                             const IntFlow& b) {
  check_flow_shape(g, a.value.size(), a.orientation.size(),
                   "positive_combination");
  check_flow_shape(g, b.value.size(), b.orientation.size(),
                   "positive_combination");
  if (!verify_flow(g, a) || !verify_flow(g, b)) {
    raise(errc::precondition_violated,
          "positive_combination requires conserved input flows");
  }
  IntFlow sum;
  sum.orientation = a.orientation;
  sum.value.assign(static_cast<size_t>(g.m()), 0);
  for (int e = 0; e < g.m(); ++e) {
    int s = a.value[static_cast<size_t>(e)];
    const int bv = b.value[static_cast<size_t>(e)];
    if (bv != 0) {
      s += b.orientation.reversed(e) == a.orientation.reversed(e) ? bv : -bv;
    }
    if (s == 0) {
      raise(errc::cancellation_to_zero,
            "edge " + std::to_string(e) + " sums to zero in the combination");
    }
    sum.value[static_cast<size_t>(e)] = s;
  }
  IntFlow out = to_all_positive(g, sum);
  assert(verify_flow(g, out));
  return out;
}

bool is_strong_two_edge(const Graph& g, const IntFlow& fl, int e) {
  check_flow_shape(g, fl.value.size(), fl.orientation.size(),
                   "is_strong_two_edge");
  if (e < 0 || e >= g.m()) {
    raise(errc::precondition_violated,
          "edge index " + std::to_string(e) + " out of range");
  }
  if (fl.value[static_cast<size_t>(e)] != 2) {
    raise(errc::value_not_two,
          "edge " + std::to_string(e) + " has value " +
              std::to_string(fl.value[static_cast<size_t>(e)]) +
              ", the strong 2-edge test needs value 2");
  }
  if (!is_all_positive(fl) || !verify_flow(g, fl)) {
    raise(errc::precondition_violated,
          "the strong 2-edge test needs an all-positive conserved flow");
  }
  for (int e1 = 0; e1 < g.m(); ++e1) {
    if (e1 == e || fl.value[static_cast<size_t>(e1)] != 1) continue;
    for (int e2 = e1 + 1; e2 < g.m(); ++e2) {
      if (e2 == e || fl.value[static_cast<size_t>(e2)] != 1) continue;
      if (is_three_edge_cut(g, e, e1, e2)) return false;
    }
  }
  return true;
}

EdgeSet flow_guaranteed_deletable(const Graph& g, const IntFlow& fl) {
  check_flow_shape(g, fl.value.size(), fl.orientation.size(),
                   "flow_guaranteed_deletable");
  if (!edge_connectivity_at_least(g, 3)) {
    raise(errc::precondition_violated,
          "the flow bound applies to 3-edge-connected graphs only");
  }
  if (!is_all_positive(fl) || !verify_flow(g, fl)) {
    raise(errc::precondition_violated,
          "the flow bound needs an all-positive conserved flow");
  }
  EdgeSet out;
  for (int e = 0; e < g.m(); ++e) {
    const int val = fl.value[static_cast<size_t>(e)];
    if (val == 1 || (val == 2 && is_strong_two_edge(g, fl, e))) {
      out.push_back(e);
    }
  }
  return out;
}

std::optional<GroupFlow> find_z2z2_flow(const Graph& g) {
  if (g.is_cubic()) {
    const auto colouring = three_edge_colouring(g);
    if (!colouring) return std::nullopt;
    static constexpr std::array<std::pair<uint8_t, uint8_t>, 3> kByColour{
        {{0, 1}, {1, 0}, {1, 1}}};
    GroupFlow out;
    out.group = FlowGroup::z2xz2;
    out.orientation = Orientation(g.m());
    out.value.resize(static_cast<size_t>(g.m()));
    for (int e = 0; e < g.m(); ++e) {
      out.value[static_cast<size_t>(e)] =
          kByColour[static_cast<size_t>((*colouring)[static_cast<size_t>(e)])];
    }
    return out;
  }
  GroupFlowSearch search(g, 2);
  if (!search.run()) return std::nullopt;
  return search.result(FlowGroup::z2xz2);
}

std::optional<GroupFlow> find_z2z3_flow(const Graph& g) {
  GroupFlowSearch search(g, 3);
  if (!search.run()) return std::nullopt;
  return search.result(FlowGroup::z2xz3);
}

FrankCertificate orientations_from_4flow(const Graph& g, const GroupFlow& gf,
                                         std::vector<IntFlow>* flows_out) {
  if (gf.group != FlowGroup::z2xz2) {
    raise(errc::precondition_violated,
          "the two-orientation construction expects a (Z2 x Z2)-flow");
  }
  check_flow_shape(g, gf.value.size(), gf.orientation.size(),
                   "orientations_from_4flow");
  if (!is_nowhere_zero(gf) || !verify_flow(g, gf)) {
    raise(errc::precondition_violated,
          "the construction needs a nowhere-zero conserved flow");
  }
  if (!edge_connectivity_at_least(g, 3)) {
    raise(errc::precondition_violated,
          "the construction needs a 3-edge-connected graph");
  }

  const int m = g.m();
  std::vector<char> in1(static_cast<size_t>(m), 0);
  std::vector<char> in2(static_cast<size_t>(m), 0);
  for (int e = 0; e < m; ++e) {
    in1[static_cast<size_t>(e)] = gf.value[static_cast<size_t>(e)].second != 0;
    in2[static_cast<size_t>(e)] = gf.value[static_cast<size_t>(e)].first != 0;
  }
  Orientation o1(m);
  Orientation o2(m);
  for (const auto& c : peel_circuits(g, in1)) orient_along(g, o1, c);
  for (const auto& c : peel_circuits(g, in2)) orient_along(g, o2, c);

  const IntFlow first = positive_combination(
      g, subgraph_flow(m, o1, in1, 1), subgraph_flow(m, o2, in2, 2));
  const IntFlow second = positive_combination(
      g, subgraph_flow(m, o1, in1, 2), subgraph_flow(m, o2, in2, -1));
  for (int e = 0; e < m; ++e) {
    assert(first.value[static_cast<size_t>(e)] >= 1 &&
           first.value[static_cast<size_t>(e)] <= 3);
    assert(second.value[static_cast<size_t>(e)] >= 1 &&
           second.value[static_cast<size_t>(e)] <= 3);
    assert((first.value[static_cast<size_t>(e)] == 1) !=
           (second.value[static_cast<size_t>(e)] == 1));
  }

  FrankCertificate cert;
  cert.method = "flow-4flow";
  cert.orientations = {first.orientation, second.orientation};
  cert.deletable = {flow_guaranteed_deletable(g, first),
                    flow_guaranteed_deletable(g, second)};
  const VerifyReport rep = verify_certificate(g, cert);
  if (!rep.ok) {
    raise(errc::internal_contradiction,
          "two-orientation construction failed verification: " + rep.reason);
  }
  if (flows_out) *flows_out = {first, second};
  return cert;
}

FrankCertificate four_orientations(const Graph& g, const GroupFlow& gf,
                                   std::vector<IntFlow>* flows_out,
                                   std::vector<FlowEdgeClass>* classes_out) {
  if (gf.group != FlowGroup::z2xz3) {
    raise(errc::precondition_violated,
          "the four-orientation construction expects a (Z2 x Z3)-flow");
  }
  check_flow_shape(g, gf.value.size(), gf.orientation.size(),
                   "four_orientations");
  if (!g.is_cubic()) {
    raise(errc::precondition_violated,
          "the four-orientation construction needs a cubic graph");
  }
  if (!edge_connectivity_at_least(g, 3)) {
    raise(errc::precondition_violated,
          "the construction needs a 3-edge-connected graph");
  }
  if (!is_nowhere_zero(gf) || !verify_flow(g, gf)) {
    raise(errc::precondition_violated,
          "the construction needs a nowhere-zero conserved flow");
  }

  const int m = g.m();
  const int n = g.n();
  std::vector<char> inD(static_cast<size_t>(m), 0);
  std::vector<char> inH(static_cast<size_t>(m), 0);
  for (int e = 0; e < m; ++e) {
    inD[static_cast<size_t>(e)] = gf.value[static_cast<size_t>(e)].first != 0;
    inH[static_cast<size_t>(e)] = gf.value[static_cast<size_t>(e)].second != 0;
  }
  std::vector<int> dDeg(static_cast<size_t>(n), 0);
  std::vector<int> hDeg(static_cast<size_t>(n), 0);
  for (int e = 0; e < m; ++e) {
    if (inD[static_cast<size_t>(e)]) {
      ++dDeg[static_cast<size_t>(g.edge(e).u)];
      ++dDeg[static_cast<size_t>(g.edge(e).v)];
    }
    if (inH[static_cast<size_t>(e)]) {
      ++hDeg[static_cast<size_t>(g.edge(e).u)];
      ++hDeg[static_cast<size_t>(g.edge(e).v)];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (dDeg[static_cast<size_t>(v)] != 0 && dDeg[static_cast<size_t>(v)] != 2) {
      raise(errc::internal_contradiction,
            "order-2 support is not a union of disjoint circuits at vertex " +
                std::to_string(v));
    }
    if (hDeg[static_cast<size_t>(v)] < 2 || hDeg[static_cast<size_t>(v)] > 3) {
      raise(errc::internal_contradiction,
            "order-3 support has degree " +
                std::to_string(hDeg[static_cast<size_t>(v)]) + " at vertex " +
                std::to_string(v));
    }
  }

  // Smoothly orient the circuits of the order-2 support.
  Orientation oD(m);
  {
    std::vector<char> mask = inD;
    for (const auto& c : peel_circuits(g, mask)) orient_along(g, oD, c);
  }

  // Threads of the order-3 support: maximal paths between degree-3 branch
  // vertices through degree-2 interior vertices.
  struct Arc {
    int from, to, edge;
  };
  struct Thread {
    int b1 = -1, b2 = -1;
    std::vector<Arc> walk;
  };
  std::vector<Thread> threads;
  std::vector<int> thread_of(static_cast<size_t>(m), -1);
  for (int v = 0; v < n; ++v) {
    if (hDeg[static_cast<size_t>(v)] != 3) continue;
    for (int e0 : g.incident(v)) {
      if (!inH[static_cast<size_t>(e0)] ||
          thread_of[static_cast<size_t>(e0)] != -1) {
        continue;
      }
      Thread t;
      t.b1 = v;
      int prev = v;
      int e = e0;
      while (true) {
        const int nxt = g.other_end(e, prev);
        t.walk.push_back({prev, nxt, e});
        thread_of[static_cast<size_t>(e)] = static_cast<int>(threads.size());
        if (hDeg[static_cast<size_t>(nxt)] == 3) {
          t.b2 = nxt;
          break;
        }
        int e2 = -1;
        for (int cand : g.incident(nxt)) {
          if (inH[static_cast<size_t>(cand)] && cand != e) {
            e2 = cand;
            break;
          }
        }
        assert(e2 != -1);
        prev = nxt;
        e = e2;
      }
      if (t.b2 == t.b1) {
        raise(errc::internal_contradiction,
              "order-3 support contains a thread closing on branch vertex " +
                  std::to_string(v));
      }
      threads.push_back(std::move(t));
    }
  }

  // Bipartition of the branch multigraph (vertices: branch vertices, edges:
  // threads).  Failure means the supplied flow was not conserved.
  std::vector<std::vector<int>> at(static_cast<size_t>(n));
  for (size_t i = 0; i < threads.size(); ++i) {
    at[static_cast<size_t>(threads[i].b1)].push_back(static_cast<int>(i));
    at[static_cast<size_t>(threads[i].b2)].push_back(static_cast<int>(i));
  }
  std::vector<int> side(static_cast<size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (hDeg[static_cast<size_t>(s)] != 3 || side[static_cast<size_t>(s)] != -1) {
      continue;
    }
    assert(at[static_cast<size_t>(s)].size() == 3);
    side[static_cast<size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int ti : at[static_cast<size_t>(v)]) {
        const Thread& t = threads[static_cast<size_t>(ti)];
        const int w = t.b1 == v ? t.b2 : t.b1;
        if (side[static_cast<size_t>(w)] == -1) {
          side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
          stack.push_back(w);
        } else if (side[static_cast<size_t>(w)] ==
                   side[static_cast<size_t>(v)]) {
          raise(errc::internal_contradiction,
                "branch multigraph is not bipartite");
        }
      }
    }
  }

  // Proper 3-colouring of the threads, constructively: a perfect matching
  // (augmenting paths) takes the first colour; the 2-regular remainder
  // decomposes into even cycles coloured alternately.
  std::vector<int> matched_at(static_cast<size_t>(n), -1);  // side-1 vertices
  std::vector<char> thread_matched(threads.size(), 0);
  const auto thread_other = [&threads](int ti, int v) {
    const Thread& t = threads[static_cast<size_t>(ti)];
    return t.b1 == v ? t.b2 : t.b1;
  };
  const std::function<bool(int, std::vector<char>&)> augment =
      [&](int x, std::vector<char>& visited) -> bool {
    for (int ti : at[static_cast<size_t>(x)]) {
      const int y = thread_other(ti, x);
      if (visited[static_cast<size_t>(y)]) continue;
      visited[static_cast<size_t>(y)] = 1;
      if (matched_at[static_cast<size_t>(y)] == -1 ||
          augment(thread_other(matched_at[static_cast<size_t>(y)], y),
                  visited)) {
        matched_at[static_cast<size_t>(y)] = ti;
        return true;
      }
    }
    return false;
  };
  for (int x = 0; x < n; ++x) {
    if (hDeg[static_cast<size_t>(x)] != 3 || side[static_cast<size_t>(x)] != 0) {
      continue;
    }
    std::vector<char> visited(static_cast<size_t>(n), 0);
    if (!augment(x, visited)) {
      raise(errc::internal_contradiction,
            "branch multigraph has no perfect matching");
    }
  }
  for (int y = 0; y < n; ++y) {
    if (matched_at[static_cast<size_t>(y)] != -1) {
      thread_matched[static_cast<size_t>(matched_at[static_cast<size_t>(y)])] =
          1;
    }
  }
  std::vector<int> tcolour(threads.size(), -1);
  for (size_t i = 0; i < threads.size(); ++i) {
    if (thread_matched[i]) tcolour[i] = 0;
  }
  for (int v = 0; v < n; ++v) {
    if (hDeg[static_cast<size_t>(v)] != 3) continue;
    for (int t0 : at[static_cast<size_t>(v)]) {
      if (thread_matched[static_cast<size_t>(t0)] ||
          tcolour[static_cast<size_t>(t0)] != -1) {
        continue;
      }
      int cur_v = v;
      int cur_t = t0;
      int next_colour = 1;
      while (true) {
        if (tcolour[static_cast<size_t>(cur_t)] != -1) {
          if (tcolour[static_cast<size_t>(cur_t)] != next_colour) {
            raise(errc::internal_contradiction,
                  "unmatched threads do not alternate (odd cycle)");
          }
          break;
        }
        tcolour[static_cast<size_t>(cur_t)] = next_colour;
        next_colour = 3 - next_colour;
        const int w = thread_other(cur_t, cur_v);
        int nxt = -1;
        for (int cand : at[static_cast<size_t>(w)]) {
          if (!thread_matched[static_cast<size_t>(cand)] && cand != cur_t) {
            nxt = cand;
            break;
          }
        }
        assert(nxt != -1);
        cur_v = w;
        cur_t = nxt;
      }
    }
  }

  // Lift colours and orientations to the support: threads run from the
  // side-0 partite set to side 1; leftover pure circuits take the first
  // colour and a smooth orientation.
  std::vector<int> colour(static_cast<size_t>(m), -1);
  Orientation oH(m);
  for (size_t i = 0; i < threads.size(); ++i) {
    const Thread& t = threads[i];
    const bool forward = side[static_cast<size_t>(t.b1)] == 0;
    for (const Arc& a : t.walk) {
      colour[static_cast<size_t>(a.edge)] = tcolour[i];
      const int tail = forward ? a.from : a.to;
      const int head = forward ? a.to : a.from;
      oH.set_reversed(a.edge, tail > head);
    }
  }
  {
    std::vector<char> circuit_mask(static_cast<size_t>(m), 0);
    for (int e = 0; e < m; ++e) {
      if (inH[static_cast<size_t>(e)] && thread_of[static_cast<size_t>(e)] == -1) {
        circuit_mask[static_cast<size_t>(e)] = 1;
      }
    }
    for (const auto& c : peel_circuits(g, circuit_mask)) {
      orient_along(g, oH, c);
      for (size_t i = 0; i < c.size(); ++i) {
        const int a = c[i];
        const int b = c[(i + 1) % c.size()];
        const int e = g.edge_index(std::min(a, b), std::max(a, b));
        colour[static_cast<size_t>(e)] = 0;
      }
    }
  }

  // Edge classes.
  std::vector<FlowEdgeClass> cls(static_cast<size_t>(m));
  for (int e = 0; e < m; ++e) {
    const bool d = inD[static_cast<size_t>(e)];
    const bool h = inH[static_cast<size_t>(e)];
    assert(d || h);
    if (d && !h) {
      cls[static_cast<size_t>(e)] = FlowEdgeClass::d_only;
      continue;
    }
    const int c = colour[static_cast<size_t>(e)];
    assert(c >= 0 && c <= 2);
    static constexpr std::array<std::array<FlowEdgeClass, 3>, 3> kByColour{{
        {FlowEdgeClass::a_only, FlowEdgeClass::a_same,
         FlowEdgeClass::a_opposite},
        {FlowEdgeClass::b_only, FlowEdgeClass::b_same,
         FlowEdgeClass::b_opposite},
        {FlowEdgeClass::c_only, FlowEdgeClass::c_same,
         FlowEdgeClass::c_opposite},
    }};
    int kind = 0;
    if (d) kind = oD.reversed(e) == oH.reversed(e) ? 1 : 2;
    cls[static_cast<size_t>(e)] =
        kByColour[static_cast<size_t>(c)][static_cast<size_t>(kind)];
  }

  // The four coefficient rows (support value, then colour values summing to
  // zero) and the classes each row values at exactly 1.
  static constexpr int kRows[4][4] = {
      {1, 2, 2, -4}, {3, 1, 1, -2}, {2, 3, -4, 1}, {2, -3, -1, 4}};
  const auto one_expected = [](FlowEdgeClass c, int row) {
    switch (c) {
      case FlowEdgeClass::d_only:
        return row == 0;
      case FlowEdgeClass::a_only:
        return row == 1;
      case FlowEdgeClass::a_same:
        return row == 3;
      case FlowEdgeClass::a_opposite:
        return row == 0 || row == 2;
      case FlowEdgeClass::b_only:
        return row == 1 || row == 3;
      case FlowEdgeClass::b_same:
        return row == 3;
      case FlowEdgeClass::b_opposite:
        return row == 0;
      case FlowEdgeClass::c_only:
        return row == 2;
      case FlowEdgeClass::c_same:
        return row == 1;
      case FlowEdgeClass::c_opposite:
        return row == 2;
    }
    return false;
  };

  std::vector<IntFlow> flows;
  FrankCertificate cert;
  cert.method = "flow-6flow";
  for (int i = 0; i < 4; ++i) {
    IntFlow fD;
    fD.orientation = oD;
    fD.value.assign(static_cast<size_t>(m), 0);
    IntFlow fH;
    fH.orientation = oH;
    fH.value.assign(static_cast<size_t>(m), 0);
    for (int e = 0; e < m; ++e) {
      if (inD[static_cast<size_t>(e)]) {
        fD.value[static_cast<size_t>(e)] = kRows[i][0];
      }
      if (inH[static_cast<size_t>(e)]) {
        fH.value[static_cast<size_t>(e)] =
            kRows[i][1 + colour[static_cast<size_t>(e)]];
      }
    }
    IntFlow hi = positive_combination(g, fD, fH);
    for (int e = 0; e < m; ++e) {
      if (hi.value[static_cast<size_t>(e)] > 6) {
        raise(errc::internal_contradiction,
              "combined flow value exceeds 6 on edge " + std::to_string(e));
      }
      if ((hi.value[static_cast<size_t>(e)] == 1) !=
          one_expected(cls[static_cast<size_t>(e)], i)) {
        raise(errc::internal_contradiction,
              "value-1 coverage pattern broken at edge " + std::to_string(e) +
                  " in row " + std::to_string(i));
      }
    }
    cert.orientations.push_back(hi.orientation);
    cert.deletable.push_back(flow_guaranteed_deletable(g, hi));
    flows.push_back(std::move(hi));
  }
  const VerifyReport rep = verify_certificate(g, cert);
  if (!rep.ok) {
    raise(errc::internal_contradiction,
          "four-orientation construction failed verification: " + rep.reason);
  }
  if (flows_out) *flows_out = std::move(flows);
  if (classes_out) *classes_out = std::move(cls);
  return cert;
}

}  // namespace frankno
