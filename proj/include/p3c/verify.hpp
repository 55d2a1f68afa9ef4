#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "p3c/graph.hpp"

namespace p3c {

struct VerifyOptions {
  int n_min = 1;
  int n_max = 1;
  bool connected_only = true;
  bool dedup = false;
};

/// Per-order counters. Every *_failures counter must stay at zero.
struct OrderStats {
  int n = 0;
  std::uint64_t scanned = 0;
  std::uint64_t p3_connected = 0;
  std::uint64_t disagreements = 0;      ///< direct != fast
  std::uint64_t forward_failures = 0;   ///< direct but disconnected or with a witness
  std::uint64_t corollary_failures = 0; ///< connected, triangle-free, not direct
  std::uint64_t spanning_failures = 0;  ///< no connected module, yet a class misses a vertex

  OrderStats &operator+=(const OrderStats &other);
  friend bool operator==(const OrderStats &, const OrderStats &) = default;
};

struct VerifyFailure {
  std::string graph6;
  std::string check; ///< "theorem", "forward", "corollary" or "spanning"

  friend auto operator<=>(const VerifyFailure &, const VerifyFailure &) = default;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<OrderStats> orders;
  std::vector<VerifyFailure> failures; ///< sorted
  OrderStats totals() const;
  bool ok() const { return failures.empty(); }
};

/// Exhaustive brute force over vertex subsets: some X with 2 <= |X| < n,
/// g[X] connected, every outside vertex complete or anti-complete to X.
/// Requires n <= 20.
bool has_connected_homogeneous_set(const Graph &g);

/// Runs every per-graph check on g, adding to `stats` and `failures`.
void verify_graph(const Graph &g, OrderStats &stats, std::vector<VerifyFailure> &failures);

/// Serial reference: enumerate each order in [n_min, n_max] (optionally up
/// to isomorphism) and verify every graph.
VerifyReport verify_range(const VerifyOptions &options);

/// OpenMP kernel with the same report as verify_range for any thread count.
VerifyReport verify_range_parallel(const VerifyOptions &options);

std::string format_report(const VerifyReport &report);
nlohmann::json report_to_json(const VerifyReport &report);

} // namespace p3c
