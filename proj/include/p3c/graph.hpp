#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3c {

using Vertex = int;
using EdgeId = std::size_t;

/// Undirected edge in canonical form, u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Builds the canonical edge {a, b}; throws ContractViolation when a == b.
Edge make_edge(Vertex a, Vertex b);

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates an arbitrary list of vertices.
VertexSet make_vertex_set(std::vector<Vertex> members);

/// A caller broke an operation's precondition (foreign edge, overlapping
/// sets, vertex out of range, ...).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Edges are kept sorted lexicographically, so an EdgeId is the rank of the
/// edge in that order. Adjacency is answered from a dense bit matrix.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws ContractViolation on self-loops, duplicates or endpoints >= n.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge &edge(EdgeId id) const { return edges_.at(id); }

  bool adjacent(Vertex u, Vertex v) const {
    return (matrix_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }

  /// Sorted neighbours of v.
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;

  /// Id of e; throws ContractViolation when e is not an edge of this graph.
  EdgeId require_edge(const Edge &e) const;

  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> matrix_;
};

/// Throws ContractViolation unless every member of X is a vertex of g.
void require_subset(const Graph &g, const VertexSet &X);

Graph complement(const Graph &g);

/// g[X], relabelled so that the i-th smallest member of X becomes vertex i.
Graph induced_subgraph(const Graph &g, const VertexSet &X);

/// Components in order of their smallest vertex. The empty graph has none.
std::vector<VertexSet> components(const Graph &g);

/// Graphs on zero or one vertex count as connected.
bool is_connected(const Graph &g);

/// Requires A and B disjoint.
bool is_complete_between(const Graph &g, const VertexSet &A, const VertexSet &B);
bool is_anticomplete_between(const Graph &g, const VertexSet &A, const VertexSet &B);

/// Vertex sets of the components of the complement of g[X], ordered by
/// smallest member.
std::vector<VertexSet> anti_components(const Graph &g, const VertexSet &X);

/// N(X): vertices outside X with a neighbour in X.
VertexSet neighbours(const Graph &g, const VertexSet &X);

/// N[X] = N(X) + X.
VertexSet closed_neighbourhood(const Graph &g, const VertexSet &X);

bool is_triangle_free(const Graph &g);

std::string to_string(const Edge &e);

} // namespace p3c
