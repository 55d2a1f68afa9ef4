#include "p3c/verify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "p3c/enumerate.hpp"
#include "p3c/graph_io.hpp"
#include "p3c/p3_partition.hpp"
#include "p3c/theorem.hpp"

namespace p3c {

namespace {

void require_options(const VerifyOptions &options) {
  if (options.n_min < 1 || options.n_max > max_enumeration_order || options.n_min > options.n_max)
    throw ContractViolation("verify range must satisfy 1 <= n_min <= n_max <= " +
                            std::to_string(max_enumeration_order));
}

bool subset_connected(const std::vector<std::uint32_t> &rows, std::uint32_t subset) {
  std::uint32_t reached = subset & (~subset + 1);
  std::uint32_t frontier = reached;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1)
      next |= rows[std::countr_zero(f)];
    next &= subset;
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == subset;
}

void finish(VerifyReport &report) {
  std::sort(report.failures.begin(), report.failures.end());
}

} // namespace

OrderStats &OrderStats::operator+=(const OrderStats &other) {
  scanned += other.scanned;
  p3_connected += other.p3_connected;
  disagreements += other.disagreements;
  forward_failures += other.forward_failures;
  corollary_failures += other.corollary_failures;
  spanning_failures += other.spanning_failures;
  return *this;
}

OrderStats VerifyReport::totals() const {
  OrderStats total;
  for (const auto &s : orders)
    total += s;
  return total;
}

bool has_connected_homogeneous_set(const Graph &g) {
  const int n = g.order();
  if (n > 20)
    throw ContractViolation("brute-force module search is limited to 20 vertices");
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
  for (const auto &e : g.edges()) {
    rows[e.u] |= 1U << e.v;
    rows[e.v] |= 1U << e.u;
  }
  const std::uint32_t all = n == 0 ? 0 : (n == 32 ? ~0U : (1U << n) - 1);
  for (std::uint32_t subset = 1; subset < all; ++subset) {
    if (std::popcount(subset) < 2)
      continue;
    bool homogeneous = true;
    for (std::uint32_t out = all & ~subset; out && homogeneous; out &= out - 1) {
      const std::uint32_t seen = rows[std::countr_zero(out)] & subset;
      homogeneous = seen == 0 || seen == subset;
    }
    if (homogeneous && subset_connected(rows, subset))
      return true;
  }
  return false;
}

void verify_graph(const Graph &g, OrderStats &stats, std::vector<VerifyFailure> &failures) {
  ++stats.scanned;
  const TheoremVerdict verdict = check_theorem(g);
  const auto fail = [&](const char *check) { failures.push_back({emit_graph6(g), check}); };

  if (verdict.direct)
    ++stats.p3_connected;
  if (!verdict.agree) {
    ++stats.disagreements;
    fail("theorem");
  }
  if (verdict.direct && (!verdict.connected || verdict.witness)) {
    ++stats.forward_failures;
    fail("forward");
  }
  if (verdict.connected && !verdict.direct && is_triangle_free(g)) {
    ++stats.corollary_failures;
    fail("corollary");
  }
  if (verdict.connected && !has_connected_homogeneous_set(g)) {
    const auto partition = p3_partition(g);
    for (std::size_t c = 0; c < partition.count(); ++c)
      if (class_vertices(g, partition, c).size() != static_cast<std::size_t>(g.order())) {
        ++stats.spanning_failures;
        fail("spanning");
        break;
      }
  }
}

VerifyReport verify_range(const VerifyOptions &options) {
  require_options(options);
  VerifyReport report;
  report.options = options;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    OrderStats stats;
    stats.n = n;
    if (options.dedup) {
      for (const auto &g : isomorphism_representatives(n, options.connected_only, false))
        verify_graph(g, stats, report.failures);
    } else {
      enumerate_graphs(n, options.connected_only,
                       [&](const Graph &g) { verify_graph(g, stats, report.failures); });
    }
    report.orders.push_back(stats);
  }
  finish(report);
  return report;
}

VerifyReport verify_range_parallel(const VerifyOptions &options) {
  require_options(options);
  VerifyReport report;
  report.options = options;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    OrderStats stats;
    stats.n = n;
    std::vector<Graph> representatives;
    std::vector<std::uint64_t> masks;
    if (options.dedup)
      representatives = isomorphism_representatives(n, options.connected_only, true);
    else
      masks = graph_masks(n, options.connected_only);
    const auto count = static_cast<long long>(options.dedup ? representatives.size() : masks.size());

#pragma omp parallel
    {
      OrderStats local;
      std::vector<VerifyFailure> local_failures;
#pragma omp for schedule(dynamic, 256) nowait
      for (long long i = 0; i < count; ++i) {
        if (options.dedup)
          verify_graph(representatives[i], local, local_failures);
        else
          verify_graph(labeled_graph(n, masks[i]), local, local_failures);
      }
#pragma omp critical
      {
        stats += local;
        report.failures.insert(report.failures.end(), local_failures.begin(), local_failures.end());
      }
    }
    report.orders.push_back(stats);
  }
  finish(report);
  return report;
}

std::string format_report(const VerifyReport &report) {
  const OrderStats total = report.totals();
  std::ostringstream out;
  out << "scanned " << total.scanned << (report.options.connected_only ? " connected" : "")
      << (report.options.dedup ? " graphs up to isomorphism" : " labeled graphs") << ", "
      << total.disagreements << " disagreements\n";
  for (const auto &s : report.orders)
    out << "  n=" << s.n << ": scanned " << s.scanned << ", P3-connected " << s.p3_connected
        << ", disagreements " << s.disagreements << ", forward failures " << s.forward_failures
        << ", corollary failures " << s.corollary_failures << ", spanning failures " << s.spanning_failures
        << '\n';
  for (const auto &f : report.failures)
    out << "FAIL " << f.check << ' ' << f.graph6 << '\n';
  out << (report.ok() ? "OK" : "FAILED") << '\n';
  return out.str();
}

nlohmann::json report_to_json(const VerifyReport &report) {
  const auto stats_json = [](const OrderStats &s) {
    return nlohmann::json{{"scanned", s.scanned},
                          {"p3_connected", s.p3_connected},
                          {"disagreements", s.disagreements},
                          {"forward_failures", s.forward_failures},
                          {"corollary_failures", s.corollary_failures},
                          {"spanning_failures", s.spanning_failures}};
  };
  nlohmann::json per_n = nlohmann::json::array();
  for (const auto &s : report.orders) {
    auto entry = stats_json(s);
    entry["n"] = s.n;
    per_n.push_back(entry);
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const auto &f : report.failures)
    failures.push_back({{"graph6", f.graph6}, {"check", f.check}});
  return {{"n_min", report.options.n_min},
          {"n_max", report.options.n_max},
          {"connected_only", report.options.connected_only},
          {"dedup", report.options.dedup},
          {"totals", stats_json(report.totals())},
          {"per_n", per_n},
          {"failures", failures},
          {"ok", report.ok()}};
}

} // namespace p3c
