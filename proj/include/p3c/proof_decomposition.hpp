#pragma once

#include <string>
#include <utility>
#include <vector>

#include "p3c/graph.hpp"

namespace p3c {

/// Names the block `blocks[part][block]` of a ProofDecomposition.
struct BlockRef {
  std::size_t part = 0;
  std::size_t block = 0;

  friend auto operator<=>(const BlockRef &, const BlockRef &) = default;
};

/// The neighbourhood structure around a vertex x that the sufficiency
/// argument for the characterization works with.
///
/// N(x) is split by the P3 class of the edge joining each neighbour to x
/// (`parts`, ordered by class id), each part into the anti-components of the
/// subgraph it induces (`blocks`), and for every block the set of far
/// vertices (not in N[x]) adjacent to it (`reach`).
///
/// Two facts hold on every graph and are checked here; a failure lands in
/// `claim_violations` and means a bug in this toolkit:
///   - distinct parts are complete to each other;
///   - every edge from a far vertex into a part belongs to that part's class.
///
/// Arcs between blocks of different parts are diagnostic only. For blocks
/// P (part i) and Q (part j), i < j:
///   (1) all P-Q edges are in class j and Q is complete to reach(P);
///   (2) all P-Q edges are in class i and P is complete to reach(Q).
/// Exactly one of them is guaranteed only when the graph has no non-stable
/// homogeneous set. If exactly one holds an arc P->Q (1) or Q->P (2) is
/// recorded, otherwise the pair goes to `dichotomy_failures`.
struct ProofDecomposition {
  Vertex x = 0;
  VertexSet far;                               ///< V - N[x]
  std::vector<EdgeId> part_class;              ///< class id behind each part
  std::vector<VertexSet> parts;
  std::vector<std::vector<VertexSet>> blocks;
  std::vector<std::vector<VertexSet>> reach;
  std::vector<std::pair<BlockRef, BlockRef>> arcs;
  std::vector<std::pair<BlockRef, BlockRef>> dichotomy_failures;
  std::vector<std::string> claim_violations;
};

/// Requires g connected and x non-adjacent to at least one other vertex.
ProofDecomposition proof_decomposition(const Graph &g, Vertex x);

} // namespace p3c
