#pragma once

#include <optional>

#include "p3c/graph.hpp"

namespace p3c {

/// A non-stable homogeneous set together with an edge inside it.
struct ModuleWitness {
  VertexSet members;
  Edge witness_edge;

  friend bool operator==(const ModuleWitness &, const ModuleWitness &) = default;
};

bool is_stable(const Graph &g, const VertexSet &X);

/// 2 <= |X| < n and every vertex outside X sees all of X or none of it.
bool is_homogeneous_set(const Graph &g, const VertexSet &X);

/// Smallest S containing {u, v} that no outside vertex distinguishes (has
/// both a neighbour and a non-neighbour in S). Equals V(g) when no proper
/// homogeneous set contains the pair. O(n^2 + m).
VertexSet min_module_containing(const Graph &g, Vertex u, Vertex v);

/// Scans edges in lexicographic order and returns the first whose minimal
/// module is proper. Empty iff g has no non-stable homogeneous set.
std::optional<ModuleWitness> find_nonstable_homogeneous_set(const Graph &g);

/// Same result as find_nonstable_homogeneous_set, closures computed with
/// OpenMP across edge seeds; the smallest qualifying edge id is kept.
std::optional<ModuleWitness> find_nonstable_homogeneous_set_parallel(const Graph &g);

/// Characterization-based decision: connected and no non-stable
/// homogeneous set.
bool is_p3_connected_fast(const Graph &g);

} // namespace p3c
