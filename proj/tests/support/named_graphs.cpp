#include "named_graphs.hpp"

#include <utility>

namespace frankno::testsupport {

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < subsets.size(); ++i)
    for (size_t j = i + 1; j < subsets.size(); ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph::from_edges(10, edges);
}

Graph prism() {
  return Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph cube_q3() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (v < (v ^ (1 << bit))) edges.emplace_back(v, v ^ (1 << bit));
  return Graph::from_edges(8, edges);
}

Graph wheel(int rim) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= rim; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % rim + 1);
  }
  return Graph::from_edges(rim + 1, edges);
}

Graph flower_snark(int k) {
  // Vertices: c_i = 4i, x_i = 4i+1, y_i = 4i+2, z_i = 4i+3.
  auto c = [](int i) { return 4 * i; };
  auto x = [](int i) { return 4 * i + 1; };
  auto y = [](int i) { return 4 * i + 2; };
  auto z = [](int i) { return 4 * i + 3; };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(c(i), x(i));
    edges.emplace_back(c(i), y(i));
    edges.emplace_back(c(i), z(i));
    edges.emplace_back(x(i), x((i + 1) % k));
  }
  for (int i = 0; i + 1 < k; ++i) {
    edges.emplace_back(y(i), y(i + 1));
    edges.emplace_back(z(i), z(i + 1));
  }
  edges.emplace_back(y(k - 1), z(0));
  edges.emplace_back(z(k - 1), y(0));
  return Graph::from_edges(4 * k, edges);
}

Graph two_k4_bridge() {
  // K4 on {0,1,2,3} with edge (2,3) subdivided by 4; mirrored on {5..9}.
  std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
      {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9},
      {4, 9}};
  return Graph::from_edges(10, edges);
}

Graph circular_ladder(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, (i + 1) % k});
    edges.push_back({k + i, k + (i + 1) % k});
    edges.push_back({i, k + i});
  }
  return Graph::from_edges(2 * k, edges);
}

}  // namespace frankno::testsupport
