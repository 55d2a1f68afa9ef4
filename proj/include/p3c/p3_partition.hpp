#pragma once

#include <optional>
#include <vector>

#include "p3c/graph.hpp"

namespace p3c {

/// True iff e != f, they share exactly one endpoint and the two other
/// endpoints are non-adjacent, i.e. e and f are the two edges of an induced
/// 3-vertex path. Both must be edges of g.
bool induced_p3_related(const Graph &g, const Edge &e, const Edge &f);

/// Partition of E(g) into maximal P3-connected classes.
///
/// A class is identified by the id of its lexicographically smallest edge, so
/// two partitions of the same graph compare equal member-for-member.
struct P3Partition {
  /// Class id for every EdgeId.
  std::vector<EdgeId> class_of;
  /// Member edge ids of each class, ascending; classes ordered by id.
  std::vector<std::vector<EdgeId>> classes;

  std::size_t count() const { return classes.size(); }

  /// Position of the class with the given id in `classes`.
  std::size_t index_of(EdgeId class_id) const;

  friend bool operator==(const P3Partition &, const P3Partition &) = default;
};

/// Union-find over pairs of edges meeting at a vertex: O(sum of deg^2).
P3Partition p3_partition(const Graph &g);

/// A sequence of edges, consecutive pairs induced-P3 related.
struct P3Chain {
  std::vector<Edge> edges;
};

/// Shortest chain from e to f by breadth-first search over the relation,
/// expanding neighbours in lexicographic order; nullopt when e and f lie in
/// different classes.
std::optional<P3Chain> p3_chain(const Graph &g, const Edge &e, const Edge &f);

/// True iff every consecutive pair of the chain is induced-P3 related in g.
bool is_valid_chain(const Graph &g, const P3Chain &chain);

/// Definition-based decision: connected and at most one class.
bool is_p3_connected(const Graph &g);

/// True iff every edge of H lies in one class of g's partition.
bool edge_set_p3_connected_in(const Graph &g, const std::vector<Edge> &H);

/// Vertices touched by the edges of one class.
VertexSet class_vertices(const Graph &g, const P3Partition &partition, std::size_t class_index);

} // namespace p3c
