#include "p3c/proof_decomposition.hpp"

#include <algorithm>
#include <map>

#include "p3c/p3_partition.hpp"

namespace p3c {

namespace {

// Every edge between A and B lies in class `cls`.
bool edges_in_class(const Graph &g, const P3Partition &partition, const VertexSet &A, const VertexSet &B,
                    EdgeId cls) {
  for (Vertex a : A)
    for (Vertex b : B)
      if (auto id = g.edge_id(a, b); id && partition.class_of[*id] != cls)
        return false;
  return true;
}

} // namespace

ProofDecomposition proof_decomposition(const Graph &g, Vertex x) {
  if (!g.has_vertex(x))
    throw ContractViolation("vertex " + std::to_string(x) + " is not in the graph");
  if (!is_connected(g))
    throw ContractViolation("proof decomposition needs a connected graph");
  const VertexSet closed = closed_neighbourhood(g, {x});
  if (closed.size() == static_cast<std::size_t>(g.order()))
    throw ContractViolation("vertex " + std::to_string(x) + " is adjacent to every other vertex");

  const P3Partition partition = p3_partition(g);
  ProofDecomposition out;
  out.x = x;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!std::binary_search(closed.begin(), closed.end(), v))
      out.far.push_back(v);

  std::map<EdgeId, VertexSet> by_class;
  for (Vertex u : g.neighbours(x))
    by_class[partition.class_of[*g.edge_id(x, u)]].push_back(u);
  for (auto &[cls, members] : by_class) {
    out.part_class.push_back(cls);
    out.parts.push_back(members);
    out.blocks.push_back(anti_components(g, members));
    auto &reach = out.reach.emplace_back();
    for (const auto &block : out.blocks.back()) {
      VertexSet r;
      for (Vertex y : out.far)
        if (std::any_of(block.begin(), block.end(), [&](Vertex b) { return g.adjacent(y, b); }))
          r.push_back(y);
      reach.push_back(std::move(r));
    }
  }

  const std::size_t m = out.parts.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!is_complete_between(g, out.parts[i], out.parts[j]))
        out.claim_violations.push_back("parts " + std::to_string(i) + " and " + std::to_string(j) +
                                       " are not complete to each other");

  for (std::size_t i = 0; i < m; ++i)
    for (Vertex y : out.far)
      for (Vertex u : out.parts[i])
        if (auto id = g.edge_id(y, u); id && partition.class_of[*id] != out.part_class[i])
          out.claim_violations.push_back("far edge " + to_string(make_edge(y, u)) + " is not in the class of part " +
                                         std::to_string(i));

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t s = 0; s < out.blocks[i].size(); ++s)
        for (std::size_t t = 0; t < out.blocks[j].size(); ++t) {
          const auto &P = out.blocks[i][s];
          const auto &Q = out.blocks[j][t];
          const bool first = edges_in_class(g, partition, P, Q, out.part_class[j]) &&
                             is_complete_between(g, Q, out.reach[i][s]);
          const bool second = edges_in_class(g, partition, P, Q, out.part_class[i]) &&
                              is_complete_between(g, P, out.reach[j][t]);
          const BlockRef p{i, s};
          const BlockRef q{j, t};
          if (first && !second)
            out.arcs.emplace_back(p, q);
          else if (second && !first)
            out.arcs.emplace_back(q, p);
          else
            out.dichotomy_failures.emplace_back(p, q);
        }
  return out;
}

} // namespace p3c
