#include "p3c/p3_partition.hpp"

#include <algorithm>
#include <numeric>

namespace p3c {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root wins, so each root is the minimum of its set.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<std::size_t> parent_;
};

// Edges f with (e, f) induced-P3 related, ascending by id.
std::vector<EdgeId> related_edges(const Graph &g, const Edge &e) {
  std::vector<EdgeId> out;
  const auto extend = [&](Vertex centre, Vertex other) {
    for (Vertex w : g.neighbours(centre))
      if (w != other && !g.adjacent(w, other))
        out.push_back(*g.edge_id(centre, w));
  };
  extend(e.u, e.v);
  extend(e.v, e.u);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

bool induced_p3_related(const Graph &g, const Edge &e, const Edge &f) {
  g.require_edge(e);
  g.require_edge(f);
  if (e == f)
    return false;
  Vertex shared = -1;
  Vertex a = -1;
  Vertex b = -1;
  if (e.u == f.u) {
    shared = e.u, a = e.v, b = f.v;
  } else if (e.u == f.v) {
    shared = e.u, a = e.v, b = f.u;
  } else if (e.v == f.u) {
    shared = e.v, a = e.u, b = f.v;
  } else if (e.v == f.v) {
    shared = e.v, a = e.u, b = f.u;
  }
  if (shared < 0)
    return false;
  return !g.adjacent(a, b);
}

std::size_t P3Partition::index_of(EdgeId class_id) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), class_id,
                             [](const std::vector<EdgeId> &cls, EdgeId id) { return cls.front() < id; });
  if (it == classes.end() || it->front() != class_id)
    throw ContractViolation("no class with id " + std::to_string(class_id));
  return static_cast<std::size_t>(it - classes.begin());
}

P3Partition p3_partition(const Graph &g) {
  DisjointSets sets(g.size());
  for (Vertex centre = 0; centre < g.order(); ++centre) {
    auto nbrs = g.neighbours(centre);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!g.adjacent(nbrs[i], nbrs[j]))
          sets.unite(*g.edge_id(centre, nbrs[i]), *g.edge_id(centre, nbrs[j]));
  }

  P3Partition out;
  out.class_of.resize(g.size());
  std::vector<std::size_t> slot(g.size());
  for (EdgeId id = 0; id < g.size(); ++id) {
    out.class_of[id] = sets.find(id);
    // Roots are class minima, so a class's root is its first edge seen here.
    if (out.class_of[id] == id) {
      slot[id] = out.classes.size();
      out.classes.push_back({});
    }
    out.classes[slot[out.class_of[id]]].push_back(id);
  }
  return out;
}

std::optional<P3Chain> p3_chain(const Graph &g, const Edge &e, const Edge &f) {
  const EdgeId source = g.require_edge(e);
  const EdgeId target = g.require_edge(f);
  constexpr EdgeId unseen = static_cast<EdgeId>(-1);
  std::vector<EdgeId> parent(g.size(), unseen);
  std::vector<EdgeId> queue{source};
  parent[source] = source;
  for (std::size_t head = 0; head < queue.size() && parent[target] == unseen; ++head) {
    const EdgeId cur = queue[head];
    for (EdgeId next : related_edges(g, g.edge(cur)))
      if (parent[next] == unseen) {
        parent[next] = cur;
        queue.push_back(next);
      }
  }
  if (parent[target] == unseen)
    return std::nullopt;

  P3Chain chain;
  for (EdgeId cur = target;; cur = parent[cur]) {
    chain.edges.push_back(g.edge(cur));
    if (cur == source)
      break;
  }
  std::reverse(chain.edges.begin(), chain.edges.end());
  return chain;
}

bool is_valid_chain(const Graph &g, const P3Chain &chain) {
  if (chain.edges.empty())
    return false;
  for (const auto &e : chain.edges)
    if (!g.edge_id(e.u, e.v))
      return false;
  for (std::size_t i = 0; i + 1 < chain.edges.size(); ++i)
    if (!induced_p3_related(g, chain.edges[i], chain.edges[i + 1]))
      return false;
  return true;
}

bool is_p3_connected(const Graph &g) { return is_connected(g) && p3_partition(g).count() <= 1; }

bool edge_set_p3_connected_in(const Graph &g, const std::vector<Edge> &H) {
  std::vector<EdgeId> ids;
  ids.reserve(H.size());
  for (const auto &e : H)
    ids.push_back(g.require_edge(e));
  if (ids.size() <= 1)
    return true;
  const auto partition = p3_partition(g);
  return std::all_of(ids.begin(), ids.end(),
                     [&](EdgeId id) { return partition.class_of[id] == partition.class_of[ids.front()]; });
}

VertexSet class_vertices(const Graph &g, const P3Partition &partition, std::size_t class_index) {
  std::vector<Vertex> out;
  for (EdgeId id : partition.classes.at(class_index)) {
    out.push_back(g.edge(id).u);
    out.push_back(g.edge(id).v);
  }
  return make_vertex_set(std::move(out));
}

} // namespace p3c
