#include "p3c/graph.hpp"

#include <algorithm>
#include <numeric>

namespace p3c {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b)
    throw ContractViolation("self-loop " + std::to_string(a) + "-" + std::to_string(b));
  return a < b ? Edge{a, b} : Edge{b, a};
}

VertexSet make_vertex_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0)
    throw ContractViolation("negative vertex count");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  matrix_.assign(static_cast<std::size_t>(n) * words_, 0);
  adj_.resize(static_cast<std::size_t>(n));

  for (auto &e : edges_) {
    if (e.u == e.v)
      throw ContractViolation("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v)
      std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n)
      throw ContractViolation("edge " + to_string(e) + " has an endpoint outside 0.." +
                              std::to_string(n - 1));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw ContractViolation("duplicate edge " + to_string(*dup));

  for (const auto &e : edges_) {
    matrix_[static_cast<std::size_t>(e.u) * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    matrix_[static_cast<std::size_t>(e.v) * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto &list : adj_)
    std::sort(list.begin(), list.end());
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
  if (a == b || !has_vertex(a) || !has_vertex(b))
    return std::nullopt;
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

EdgeId Graph::require_edge(const Edge &e) const {
  if (auto id = edge_id(e.u, e.v))
    return *id;
  throw ContractViolation(to_string(e) + " is not an edge of the graph");
}

void require_subset(const Graph &g, const VertexSet &X) {
  for (Vertex v : X)
    if (!g.has_vertex(v))
      throw ContractViolation("vertex " + std::to_string(v) + " is not in the graph");
}

Graph complement(const Graph &g) {
  std::vector<Edge> edges;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v))
        edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph induced_subgraph(const Graph &g, const VertexSet &X) {
  require_subset(g, X);
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < X.size(); ++i)
    index[X[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto &e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0)
      edges.push_back(make_edge(index[e.u], index[e.v]));
  return Graph(static_cast<int>(X.size()), std::move(edges));
}

std::vector<VertexSet> components(const Graph &g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph &g) { return components(g).size() <= 1; }

namespace {

void require_disjoint(const VertexSet &A, const VertexSet &B) {
  VertexSet common;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(common));
  if (!common.empty())
    throw ContractViolation("vertex sets overlap at " + std::to_string(common.front()));
}

} // namespace

bool is_complete_between(const Graph &g, const VertexSet &A, const VertexSet &B) {
  require_subset(g, A);
  require_subset(g, B);
  require_disjoint(A, B);
  for (Vertex a : A)
    for (Vertex b : B)
      if (!g.adjacent(a, b))
        return false;
  return true;
}

bool is_anticomplete_between(const Graph &g, const VertexSet &A, const VertexSet &B) {
  require_subset(g, A);
  require_subset(g, B);
  require_disjoint(A, B);
  for (Vertex a : A)
    for (Vertex b : B)
      if (g.adjacent(a, b))
        return false;
  return true;
}

std::vector<VertexSet> anti_components(const Graph &g, const VertexSet &X) {
  require_subset(g, X);
  // Search in the complement of g[X] without materialising it.
  std::vector<char> seen(X.size(), 0);
  std::vector<VertexSet> out;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < X.size(); ++s) {
    if (seen[s])
      continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(X[i]);
      for (std::size_t j = 0; j < X.size(); ++j)
        if (!seen[j] && j != i && !g.adjacent(X[i], X[j])) {
          seen[j] = 1;
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet neighbours(const Graph &g, const VertexSet &X) {
  require_subset(g, X);
  std::vector<char> in_x(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : X)
    in_x[v] = 1;
  std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : X)
    for (Vertex w : g.neighbours(v))
      if (!in_x[w])
        hit[w] = 1;
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[v])
      out.push_back(v);
  return out;
}

VertexSet closed_neighbourhood(const Graph &g, const VertexSet &X) {
  VertexSet out = neighbours(g, X);
  out.insert(out.end(), X.begin(), X.end());
  return make_vertex_set(std::move(out));
}

bool is_triangle_free(const Graph &g) {
  for (const auto &e : g.edges()) {
    auto a = g.neighbours(e.u);
    auto b = g.neighbours(e.v);
    // Sorted lists: any common neighbour closes a triangle.
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j)
        return false;
      if (*i < *j)
        ++i;
      else
        ++j;
    }
  }
  return true;
}

std::string to_string(const Edge &e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

} // namespace p3c
