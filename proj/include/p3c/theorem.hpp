#pragma once

#include <optional>

#include "p3c/graph.hpp"
#include "p3c/modules.hpp"

namespace p3c {

/// Both P3-connectivity decisions for one graph.
struct TheoremVerdict {
  bool connected = false;
  bool direct = false; ///< connected and at most one P3 class
  bool fast = false;   ///< connected and no non-stable homogeneous set
  bool agree = false;
  std::optional<ModuleWitness> witness;
  std::size_t class_count = 0;
};

/// Runs both checkers. A disagreement is reported through `agree`, never
/// thrown.
TheoremVerdict check_theorem(const Graph &g);

} // namespace p3c
