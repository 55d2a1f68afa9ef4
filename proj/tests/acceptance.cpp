// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "p3c/enumerate.hpp"
#include "p3c/graph_io.hpp"
#include "p3c/modules.hpp"
#include "p3c/p3_partition.hpp"
#include "p3c/proof_decomposition.hpp"
#include "p3c/random_graphs.hpp"
#include "p3c/theorem.hpp"

using namespace p3c;
using namespace p3c::test;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Suite {
public:
  void run(const std::string &name, const std::function<Outcome()> &criterion) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.2fs) %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), seconds,
                outcome.detail.c_str());
    std::fflush(stdout);
    failed_ += outcome.pass ? 0 : 1;
  }

  int failed() const { return failed_; }

private:
  int failed_ = 0;
};

// Enumerates every labeled graph of order 1..n_max (optionally connected).
void for_each_graph(int n_max, bool connected_only, const std::function<void(const Graph &)> &visit) {
  for (int n = 1; n <= n_max; ++n)
    for (std::uint64_t mask : graph_masks(n, connected_only))
      visit(labeled_graph(n, mask));
}

Outcome theorem_exhaustive() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t scanned = 0;
  std::uint64_t disagreements = 0;
  std::string first_bad;
  for_each_graph(6, false, [&](const Graph &g) {
    ++scanned;
    if (is_p3_connected(g) != is_p3_connected_fast(g)) {
      if (disagreements++ == 0)
        first_bad = emit_graph6(g);
    }
  });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream detail;
  detail << scanned << " graphs, " << disagreements << " disagreements, " << seconds << "s" << (first_bad.empty() ? "" : ", first " + first_bad);
  return {scanned == 33867 && disagreements == 0 && seconds < 60.0, detail.str()};
}

Outcome theorem_order_seven() {
  const auto reps = isomorphism_representatives(7, true, true);
  std::uint64_t disagreements = 0;
  for (const auto &g : reps)
    if (!check_theorem(g).agree)
      ++disagreements;
  std::ostringstream detail;
  detail << reps.size() << " representatives (expected 853), " << disagreements << " disagreements";
  return {reps.size() == 853 && disagreements == 0, detail.str()};
}

Outcome corollary() {
  std::uint64_t exhaustive = 0;
  std::uint64_t failures = 0;
  for_each_graph(7, true, [&](const Graph &g) {
    if (oracle::has_triangle(g))
      return;
    ++exhaustive;
    if (!is_p3_connected(g))
      ++failures;
  });

  std::uint64_t sampled_components = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const double p = 0.04 + 0.02 * static_cast<double>(seed % 10);
    const Graph g = random_triangle_free(30, p, seed);
    if (oracle::has_triangle(g))
      ++failures;
    for (const auto &comp : components(g)) {
      ++sampled_components;
      if (!is_p3_connected(induced_subgraph(g, comp)))
        ++failures;
    }
  }
  std::ostringstream detail;
  detail << exhaustive << " connected triangle-free graphs (n<=7), " << sampled_components
         << " sampled components, " << failures << " failures";
  return {failures == 0, detail.str()};
}

Outcome module_oracle() {
  std::uint64_t mismatches = 0;
  std::uint64_t minimality_failures = 0;
  std::uint64_t scanned = 0;
  for_each_graph(6, false, [&](const Graph &g) {
    ++scanned;
    const auto modules = oracle::all_homogeneous_sets(g);
    bool brute_nonstable = false;
    for (auto s : modules)
      brute_nonstable = brute_nonstable || oracle::has_edge_inside(g, s);
    if (find_nonstable_homogeneous_set(g).has_value() != brute_nonstable)
      ++mismatches;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const auto closure = oracle::to_mask(min_module_containing(g, u, v));
        const std::uint32_t pair = (1U << u) | (1U << v);
        for (auto s : modules)
          if ((s & pair) == pair && (closure & ~s) != 0)
            ++minimality_failures;
      }
  });
  std::ostringstream detail;
  detail << scanned << " graphs, " << mismatches << " witness mismatches, " << minimality_failures
         << " minimality failures";
  return {mismatches == 0 && minimality_failures == 0, detail.str()};
}

Outcome partition_oracle() {
  std::uint64_t scanned = 0;
  std::uint64_t mismatches = 0;
  for_each_graph(6, false, [&](const Graph &g) {
    ++scanned;
    if (p3_partition(g).class_of != oracle::partition_by_closure(g))
      ++mismatches;
  });
  std::ostringstream detail;
  detail << scanned << " graphs, " << mismatches << " mismatches";
  return {mismatches == 0, detail.str()};
}

Outcome regression_table() {
  struct Row {
    std::string name;
    Graph g;
    bool p3_connected;
    std::size_t classes;           // 0 = not asserted
    std::size_t witness_size;      // 0 = not asserted
    VertexSet witness;             // empty = not asserted
  };
  const std::vector<Row> rows = {
      {"K3", complete_graph(3), false, 3, 0, {}},
      {"K4", complete_graph(4), false, 0, 2, {}},
      {"paw", paw(), false, 2, 0, {1, 2}},
      {"diamond", diamond(), false, 3, 0, {}},
      {"C4", cycle_graph(4), true, 1, 0, {}},
      {"C5", cycle_graph(5), true, 1, 0, {}},
      {"P4", path_graph(4), true, 1, 0, {}},
      {"K2,3", complete_bipartite(2, 3), true, 1, 0, {}},
  };
  std::string bad;
  for (const auto &row : rows) {
    const auto v = check_theorem(row.g);
    bool ok = v.agree && v.direct == row.p3_connected;
    if (row.classes)
      ok = ok && v.class_count == row.classes;
    if (row.witness_size)
      ok = ok && v.witness && v.witness->members.size() == row.witness_size;
    if (!row.witness.empty())
      ok = ok && v.witness && v.witness->members == row.witness;
    if (!ok)
      bad += " " + row.name;
  }
  return {bad.empty(), bad.empty() ? "8 rows" : "wrong rows:" + bad};
}

Outcome certificates() {
  std::mt19937_64 rng(2024);
  std::uint64_t probes = 0;
  std::uint64_t failures = 0;
  std::uint64_t chains = 0;
  while (probes < 10000) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Graph g = random_gnp(n, p, rng());
    if (g.size() == 0)
      continue;
    const auto same_class = oracle::partition_by_closure(g);
    for (int k = 0; k < 10 && probes < 10000; ++k, ++probes) {
      std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
      const EdgeId a = pick(rng);
      const EdgeId b = pick(rng);
      const auto chain = p3_chain(g, g.edge(a), g.edge(b));
      if (chain.has_value() != (same_class[a] == same_class[b])) {
        ++failures;
        continue;
      }
      if (!chain)
        continue;
      ++chains;
      bool valid = chain->edges.front() == g.edge(a) && chain->edges.back() == g.edge(b);
      for (std::size_t i = 0; i + 1 < chain->edges.size(); ++i)
        valid = valid && g.edge_id(chain->edges[i].u, chain->edges[i].v) &&
                oracle::forms_induced_p3(g, chain->edges[i], chain->edges[i + 1]);
      if (!valid)
        ++failures;
    }
  }
  std::ostringstream detail;
  detail << probes << " probes, " << chains << " chains returned, " << failures << " failures";
  return {failures == 0, detail.str()};
}

Outcome spanning_classes() {
  std::uint64_t premise = 0;
  std::uint64_t failures = 0;
  for_each_graph(7, true, [&](const Graph &g) {
    if (oracle::has_connected_homogeneous_set(g))
      return;
    ++premise;
    const auto partition = p3_partition(g);
    for (std::size_t c = 0; c < partition.count(); ++c)
      if (class_vertices(g, partition, c).size() != static_cast<std::size_t>(g.order())) {
        ++failures;
        break;
      }
  });
  std::ostringstream detail;
  detail << premise << " graphs without a connected homogeneous set, " << failures << " failures";
  return {failures == 0 && premise > 0, detail.str()};
}

Outcome joins() {
  std::mt19937_64 rng(99);
  std::uint64_t failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto join = random_join(rng, trial % 2 == 0);
    const auto partition = p3_partition(join.graph);
    const EdgeId anchor = partition.class_of[*join.graph.edge_id(join.X.front(), join.Y.front())];
    bool one_class = true;
    for (Vertex x : join.X)
      for (Vertex y : join.Y)
        one_class = one_class && partition.class_of[*join.graph.edge_id(x, y)] == anchor;
    if (!one_class)
      ++failures;
  }
  return {failures == 0, "200 joins, " + std::to_string(failures) + " failures"};
}

Outcome proof_claims() {
  std::mt19937_64 rng(515);
  int graphs = 0;
  std::uint64_t decompositions = 0;
  std::uint64_t violations = 0;
  while (graphs < 1000) {
    const int n = std::uniform_int_distribution<int>(3, 15)(rng);
    const double p = std::uniform_real_distribution<double>(0.15, 0.8)(rng);
    const Graph g = random_gnp(n, p, rng());
    if (!is_connected(g) || g.size() == static_cast<std::size_t>(n * (n - 1) / 2))
      continue;
    ++graphs;
    for (Vertex x = 0; x < n; ++x) {
      if (closed_neighbourhood(g, {x}).size() == static_cast<std::size_t>(n))
        continue;
      ++decompositions;
      violations += proof_decomposition(g, x).claim_violations.size();
    }
  }
  std::ostringstream detail;
  detail << graphs << " graphs, " << decompositions << " decompositions, " << violations << " claim violations";
  return {violations == 0, detail.str()};
}

} // namespace

int main() {
  Suite suite;
  suite.run("AC1 theorem equivalence, all labeled graphs n<=6", theorem_exhaustive);
  suite.run("AC2 theorem equivalence, connected n=7 up to isomorphism", theorem_order_seven);
  suite.run("AC3 connected triangle-free graphs are P3-connected", corollary);
  suite.run("AC4 module search vs subset enumeration, n<=6", module_oracle);
  suite.run("AC5 partition vs all-pairs closure, n<=6", partition_oracle);
  suite.run("AC6 fixed-instance regression table", regression_table);
  suite.run("AC7 chain certificates, 10000 probes n<=12", certificates);
  suite.run("AC8 classes span V without connected modules, n<=7", spanning_classes);
  suite.run("AC9 complete joins of anti-connected sets", joins);
  suite.run("AC10 unconditional proof claims, 1000 graphs n<=15", proof_claims);
  std::printf("%d criteria failed\n", suite.failed());
  return suite.failed() == 0 ? 0 : 1;
}
