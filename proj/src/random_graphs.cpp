#include "p3c/random_graphs.hpp"

#include <random>
#include <string>

namespace p3c {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ContractViolation("edge probability " + std::to_string(p) + " outside [0, 1]");
}

std::vector<std::vector<char>> gnp_matrix(int n, double p, std::uint64_t seed) {
  if (n < 0)
    throw ContractViolation("negative vertex count");
  require_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p)
        adj[i][j] = adj[j][i] = 1;
    }
  return adj;
}

Graph from_matrix(const std::vector<std::vector<char>> &adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (adj[i][j])
        edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

} // namespace

Graph random_gnp(int n, double p, std::uint64_t seed) { return from_matrix(gnp_matrix(n, p, seed)); }

Graph random_triangle_free(int n, double p, std::uint64_t seed) {
  auto adj = gnp_matrix(n, p, seed);
  // Deleting edges never creates a triangle, so one lexicographic pass leaves
  // the same result as restarting the search after every deletion.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j])
        continue;
      for (int k = j + 1; k < n; ++k)
        if (adj[i][j] && adj[i][k] && adj[j][k])
          adj[j][k] = adj[k][j] = 0;
    }
  return from_matrix(adj);
}

} // namespace p3c
