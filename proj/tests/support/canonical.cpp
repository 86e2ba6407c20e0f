#include "canonical.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace frankno::testsupport {
namespace {

// Equitable refinement: re-rank vertices by (current colour, multiset of
// neighbour colours) until stable.  Colours are always normalised to ranks
// 0..k-1, the rank order extends the previous colour order, so classes only
// ever split and the loop ends after at most n passes.
std::vector<int> refine(const Graph& g, std::vector<int> col) {
  const int n = g.n();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key;
      key.reserve(g.degree(v) + 1);
      key.push_back(col[v]);
      for (int w : g.neighbors(v)) key.push_back(col[w]);
      std::sort(key.begin() + 1, key.end());
      keys[v] = {std::move(key), v};
    }
    std::sort(keys.begin(), keys.end());
    std::vector<int> next(n);
    int rank = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || keys[i].first != keys[i - 1].first) ++rank;
      next[keys[i].second] = rank;
    }
    if (next == col) return col;
    col = std::move(next);
  }
}

std::vector<int> individualise(const Graph& g, const std::vector<int>& col,
                               int v) {
  std::vector<int> split(col.size());
  for (int u = 0; u < static_cast<int>(col.size()); ++u) {
    split[u] = 2 * col[u] + (u == v ? 0 : 1);
  }
  return refine(g, std::move(split));
}

// Class sizes indexed by colour; isomorphism-invariant because refined colour
// values are ranks of isomorphism-invariant keys.
std::vector<int> class_profile(const std::vector<int>& col) {
  std::vector<int> sizes;
  for (int c : col) {
    if (c >= static_cast<int>(sizes.size())) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  return sizes;
}

struct CanonSearch {
  const Graph& g;
  std::string best_bits;
  std::vector<int> best_col;

  std::string leaf_bits(const std::vector<int>& col) const {
    std::string bits(static_cast<size_t>(g.n()) * (g.n() - 1) / 2, '0');
    for (const Edge& e : g.edges()) {
      int i = col[e.u];
      int j = col[e.v];
      if (i > j) std::swap(i, j);
      bits[static_cast<size_t>(j) * (j - 1) / 2 + i] = '1';
    }
    return bits;
  }

  void search(const std::vector<int>& col) {
    const int n = g.n();
    // Normalised colours are ranks, so the partition is discrete iff there
    // are n distinct values.
    if (n == 0 || *std::max_element(col.begin(), col.end()) == n - 1) {
      std::string bits = leaf_bits(col);
      if (best_col.empty() || bits < best_bits) {
        best_bits = std::move(bits);
        best_col = col;
      }
      return;
    }
    int target = -1;
    std::vector<int> sizes = class_profile(col);
    for (int c = 0; c < static_cast<int>(sizes.size()); ++c) {
      if (sizes[c] >= 2) {
        target = c;
        break;
      }
    }
    // Branch on every vertex of the first non-singleton class, keeping only
    // the children with the smallest class profile.  The profile is the same
    // for vertices related by an automorphism, so pruning by it keeps at
    // least one branch from every leaf orbit and the surviving tree depends
    // only on the isomorphism class.
    std::vector<std::vector<int>> kept;
    std::vector<int> best_profile;
    for (int v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      std::vector<int> child = individualise(g, col, v);
      std::vector<int> profile = class_profile(child);
      if (kept.empty() || profile < best_profile) {
        best_profile = std::move(profile);
        kept.clear();
        kept.push_back(std::move(child));
      } else if (profile == best_profile) {
        kept.push_back(std::move(child));
      }
    }
    for (const std::vector<int>& child : kept) search(child);
  }
};

std::vector<int> canonical_labels(const Graph& g, std::string* bits_out) {
  CanonSearch cs{g, {}, {}};
  cs.search(refine(g, std::vector<int>(g.n(), 0)));
  if (bits_out != nullptr) *bits_out = cs.best_bits;
  return cs.best_col;
}

}  // namespace

std::string canonical_signature(const Graph& g) {
  std::string bits;
  canonical_labels(g, &bits);
  return std::to_string(g.n()) + ":" + bits;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_signature(a) == canonical_signature(b);
}

Graph canonical_copy(const Graph& g) {
  std::vector<int> col = canonical_labels(g, nullptr);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.m());
  for (const Edge& e : g.edges()) edges.emplace_back(col[e.u], col[e.v]);
  return Graph::from_edges(g.n(), edges);
}

}  // namespace frankno::testsupport
