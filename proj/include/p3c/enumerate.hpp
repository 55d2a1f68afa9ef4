#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_set>
#include <vector>

#include "p3c/graph.hpp"

namespace p3c {

/// Largest order accepted by the exhaustive enumerator and by canonical keys.
inline constexpr int max_enumeration_order = 8;

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

/// Labeled graph whose edge set is the bit pattern `mask`. Bit k stands for
/// the k-th vertex pair in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
Graph labeled_graph(int n, std::uint64_t mask);

/// All masks 0 .. 2^(n(n-1)/2) - 1 in counter order, optionally only the
/// connected ones. Requires 1 <= n <= 8.
std::vector<std::uint64_t> graph_masks(int n, bool connected_only);

/// Streams every labeled graph on n vertices in counter order.
void enumerate_graphs(int n, bool connected_only, const std::function<void(const Graph &)> &visit);

/// Lexicographically smallest adjacency bit string (graph6 pair order) over
/// all vertex permutations, packed with the first pair in the high bit.
/// Isomorphic graphs, and only those, share a key. Requires n <= 8.
std::uint64_t canonical_key(const Graph &g);

/// Keys for each mask of order n; serial reference and OpenMP kernel.
std::vector<std::uint64_t> canonical_keys(int n, std::span<const std::uint64_t> masks);
std::vector<std::uint64_t> canonical_keys_parallel(int n, std::span<const std::uint64_t> masks);

/// Streaming deduplication: insert() is true for the first graph of each
/// isomorphism class.
class IsomorphismDeduper {
public:
  bool insert(const Graph &g);
  std::size_t size() const { return seen_.size(); }

private:
  // Order is folded into the key so graphs of different orders never clash.
  std::unordered_set<std::uint64_t> seen_;
};

/// First graph of each isomorphism class, in input order.
std::vector<Graph> dedup_by_isomorphism(std::span<const Graph> graphs);

/// One representative per isomorphism class among the labeled graphs of
/// order n (the first in counter order).
std::vector<Graph> isomorphism_representatives(int n, bool connected_only, bool parallel = false);

} // namespace p3c
