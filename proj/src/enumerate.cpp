#include "p3c/enumerate.hpp"

#include <array>
#include <bit>
#include <string>
#include <unordered_map>

namespace p3c {

namespace {

using Rows = std::array<std::uint8_t, max_enumeration_order>;

void require_order(int n) {
  if (n < 1 || n > max_enumeration_order)
    throw ContractViolation("order " + std::to_string(n) + " outside 1.." +
                            std::to_string(max_enumeration_order));
}

int pair_count(int n) { return n * (n - 1) / 2; }

Rows rows_from_mask(int n, std::uint64_t mask) {
  Rows rows{};
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) {
        rows[i] |= static_cast<std::uint8_t>(1U << j);
        rows[j] |= static_cast<std::uint8_t>(1U << i);
      }
  return rows;
}

Rows rows_from_graph(const Graph &g) {
  require_order(g.order());
  Rows rows{};
  for (const auto &e : g.edges()) {
    rows[e.u] |= static_cast<std::uint8_t>(1U << e.v);
    rows[e.v] |= static_cast<std::uint8_t>(1U << e.u);
  }
  return rows;
}

bool rows_connected(int n, const Rows &rows) {
  const unsigned all = (1U << n) - 1;
  unsigned reached = 1;
  unsigned frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (unsigned f = frontier; f; f &= f - 1)
      next |= rows[std::countr_zero(f)];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

// Branch-and-bound over vertex orderings. Placing vertex w at position k
// appends the column bits adj(p0,w) .. adj(p_{k-1},w); a prefix larger than
// the incumbent's prefix is cut. Swapping two twins fixes every other vertex,
// so only one member of a twin pair is tried at each level.
class KeySearch {
public:
  KeySearch(int n, const Rows &rows) : n_(n), rows_(rows), total_bits_(pair_count(n)) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) {
          const unsigned mu = rows_[u] & ~(1U << v);
          const unsigned mv = rows_[v] & ~(1U << u);
          if (mu == mv)
            twins_[u] |= static_cast<std::uint8_t>(1U << v);
        }
  }

  std::uint64_t run() {
    best_ = ~std::uint64_t{0};
    search(0, 0, 0, 0);
    return best_;
  }

private:
  void search(int depth, unsigned used, std::uint64_t prefix, int bits) {
    if (depth == n_) {
      if (prefix < best_)
        best_ = prefix;
      return;
    }
    unsigned tried = 0;
    for (int w = 0; w < n_; ++w) {
      if ((used >> w) & 1U)
        continue;
      if (twins_[w] & tried & ~used)
        continue;
      tried |= 1U << w;
      std::uint64_t next = prefix;
      for (int i = 0; i < depth; ++i)
        next = (next << 1) | ((rows_[order_[i]] >> w) & 1U);
      const int next_bits = bits + depth;
      if (best_ != ~std::uint64_t{0} && next > (best_ >> (total_bits_ - next_bits)))
        continue;
      order_[depth] = w;
      search(depth + 1, used | (1U << w), next, next_bits);
    }
  }

  int n_;
  Rows rows_;
  int total_bits_;
  std::array<std::uint8_t, max_enumeration_order> twins_{};
  std::array<int, max_enumeration_order> order_{};
  std::uint64_t best_ = 0;
};

std::uint64_t key_of_rows(int n, const Rows &rows) { return KeySearch(n, rows).run(); }

} // namespace

std::uint64_t labeled_graph_count(int n) {
  require_order(n);
  return std::uint64_t{1} << pair_count(n);
}

Graph labeled_graph(int n, std::uint64_t mask) {
  require_order(n);
  if (mask >= labeled_graph_count(n))
    throw ContractViolation("mask has bits beyond the vertex pairs of order " + std::to_string(n));
  std::vector<Edge> edges;
  int k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U)
        edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

std::vector<std::uint64_t> graph_masks(int n, bool connected_only) {
  const std::uint64_t count = labeled_graph_count(n);
  std::vector<std::uint64_t> out;
  if (!connected_only)
    out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (!connected_only || rows_connected(n, rows_from_mask(n, mask)))
      out.push_back(mask);
  return out;
}

void enumerate_graphs(int n, bool connected_only, const std::function<void(const Graph &)> &visit) {
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (!connected_only || rows_connected(n, rows_from_mask(n, mask)))
      visit(labeled_graph(n, mask));
}

std::uint64_t canonical_key(const Graph &g) {
  if (g.order() == 0)
    return 0;
  return key_of_rows(g.order(), rows_from_graph(g));
}

std::vector<std::uint64_t> canonical_keys(int n, std::span<const std::uint64_t> masks) {
  require_order(n);
  std::vector<std::uint64_t> keys(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i)
    keys[i] = key_of_rows(n, rows_from_mask(n, masks[i]));
  return keys;
}

std::vector<std::uint64_t> canonical_keys_parallel(int n, std::span<const std::uint64_t> masks) {
  require_order(n);
  std::vector<std::uint64_t> keys(masks.size());
  const auto count = static_cast<long long>(masks.size());
#pragma omp parallel for schedule(dynamic, 4096)
  for (long long i = 0; i < count; ++i)
    keys[i] = key_of_rows(n, rows_from_mask(n, masks[i]));
  return keys;
}

bool IsomorphismDeduper::insert(const Graph &g) {
  // 28 key bits at n = 8 leave room for the order above them.
  const std::uint64_t key = canonical_key(g) | (static_cast<std::uint64_t>(g.order()) << 32);
  return seen_.insert(key).second;
}

std::vector<Graph> dedup_by_isomorphism(std::span<const Graph> graphs) {
  IsomorphismDeduper dedup;
  std::vector<Graph> out;
  for (const auto &g : graphs)
    if (dedup.insert(g))
      out.push_back(g);
  return out;
}

std::vector<Graph> isomorphism_representatives(int n, bool connected_only, bool parallel) {
  const auto masks = graph_masks(n, connected_only);
  const auto keys = parallel ? canonical_keys_parallel(n, masks) : canonical_keys(n, masks);
  std::unordered_map<std::uint64_t, std::size_t> first;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (first.emplace(keys[i], i).second)
      picked.push_back(i);
  std::vector<Graph> out;
  out.reserve(picked.size());
  for (std::size_t i : picked)
    out.push_back(labeled_graph(n, masks[i]));
  return out;
}

} // namespace p3c
