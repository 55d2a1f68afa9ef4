#pragma once

#include "p3c/graph.hpp"

namespace p3c::test {

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back({i, j});
  return Graph(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      edges.push_back({i, a + j});
  return Graph(a + b, edges);
}

// Triangle a=0, b=1, c=2 with pendant d=3 on a.
inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

// K4 on a=0, b=1, c=2, d=3 minus the edge bd.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}); }

} // namespace p3c::test
