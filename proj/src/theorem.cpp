#include "p3c/theorem.hpp"

#include "p3c/p3_partition.hpp"

namespace p3c {

TheoremVerdict check_theorem(const Graph &g) {
  TheoremVerdict verdict;
  verdict.connected = is_connected(g);
  verdict.class_count = p3_partition(g).count();
  verdict.witness = find_nonstable_homogeneous_set(g);
  verdict.direct = verdict.connected && verdict.class_count <= 1;
  verdict.fast = verdict.connected && !verdict.witness;
  verdict.agree = verdict.direct == verdict.fast;
  return verdict;
}

} // namespace p3c
