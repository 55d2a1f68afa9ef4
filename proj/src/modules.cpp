#include "p3c/modules.hpp"

#include <algorithm>
#include <limits>

namespace p3c {

namespace {

// Closure of {u, v}: absorb distinguishers until none remain. `inside` and
// `count` are scratch buffers of size n; count[y] = |N(y) ∩ S|.
std::size_t close_module(const Graph &g, Vertex u, Vertex v, std::vector<char> &inside,
                         std::vector<int> &count) {
  const int n = g.order();
  std::fill(inside.begin(), inside.end(), 0);
  std::fill(count.begin(), count.end(), 0);
  std::size_t size = 0;
  const auto absorb = [&](Vertex w) {
    inside[w] = 1;
    ++size;
    for (Vertex y : g.neighbours(w))
      ++count[y];
  };
  absorb(u);
  absorb(v);

  bool changed = true;
  while (changed && size < static_cast<std::size_t>(n)) {
    changed = false;
    for (Vertex y = 0; y < n; ++y) {
      if (inside[y])
        continue;
      if (count[y] > 0 && static_cast<std::size_t>(count[y]) < size) {
        absorb(y);
        changed = true;
      }
    }
  }
  return size;
}

VertexSet members_of(const std::vector<char> &inside) {
  VertexSet out;
  for (std::size_t v = 0; v < inside.size(); ++v)
    if (inside[v])
      out.push_back(static_cast<Vertex>(v));
  return out;
}

} // namespace

bool is_stable(const Graph &g, const VertexSet &X) {
  require_subset(g, X);
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j)
      if (g.adjacent(X[i], X[j]))
        return false;
  return true;
}

bool is_homogeneous_set(const Graph &g, const VertexSet &X) {
  require_subset(g, X);
  const VertexSet members = make_vertex_set(X);
  if (members.size() < 2 || members.size() >= static_cast<std::size_t>(g.order()))
    return false;
  std::vector<char> inside(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : members)
    inside[v] = 1;
  for (Vertex y = 0; y < g.order(); ++y) {
    if (inside[y])
      continue;
    std::size_t hits = 0;
    for (Vertex x : members)
      hits += g.adjacent(x, y) ? 1 : 0;
    if (hits != 0 && hits != members.size())
      return false;
  }
  return true;
}

VertexSet min_module_containing(const Graph &g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw ContractViolation("seed vertex outside the graph");
  if (u == v)
    throw ContractViolation("seed pair needs two distinct vertices");
  std::vector<char> inside(static_cast<std::size_t>(g.order()));
  std::vector<int> count(static_cast<std::size_t>(g.order()));
  close_module(g, u, v, inside, count);
  return members_of(inside);
}

std::optional<ModuleWitness> find_nonstable_homogeneous_set(const Graph &g) {
  std::vector<char> inside(static_cast<std::size_t>(g.order()));
  std::vector<int> count(static_cast<std::size_t>(g.order()));
  for (const auto &e : g.edges())
    if (close_module(g, e.u, e.v, inside, count) < static_cast<std::size_t>(g.order()))
      return ModuleWitness{members_of(inside), e};
  return std::nullopt;
}

std::optional<ModuleWitness> find_nonstable_homogeneous_set_parallel(const Graph &g) {
  const auto m = static_cast<long long>(g.size());
  const auto n = static_cast<std::size_t>(g.order());
  long long best = std::numeric_limits<long long>::max();

#pragma omp parallel
  {
    std::vector<char> inside(n);
    std::vector<int> count(n);
    long long local = std::numeric_limits<long long>::max();
    // Ids beyond a known hit cannot win; each thread still scans its own
    // chunk in ascending order so the first local hit is its minimum.
#pragma omp for schedule(static)
    for (long long id = 0; id < m; ++id) {
      if (local != std::numeric_limits<long long>::max())
        continue;
      const auto &e = g.edge(static_cast<EdgeId>(id));
      if (close_module(g, e.u, e.v, inside, count) < n)
        local = id;
    }
#pragma omp critical
    best = std::min(best, local);
  }

  if (best == std::numeric_limits<long long>::max())
    return std::nullopt;
  const Edge e = g.edge(static_cast<EdgeId>(best));
  return ModuleWitness{min_module_containing(g, e.u, e.v), e};
}

bool is_p3_connected_fast(const Graph &g) {
  return is_connected(g) && !find_nonstable_homogeneous_set(g).has_value();
}

} // namespace p3c
