// Serial reference vs OpenMP kernel timings. Usage: bench_kernels [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "p3c/enumerate.hpp"
#include "p3c/modules.hpp"
#include "p3c/random_graphs.hpp"
#include "p3c/verify.hpp"

using namespace p3c;

namespace {

double seconds(const std::function<void()> &work) {
  const auto start = std::chrono::steady_clock::now();
  work();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char *name, double serial, double parallel, bool same) {
  std::printf("%-38s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char **argv) {
  if (argc > 1)
    omp_set_num_threads(std::atoi(argv[1]));
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const auto masks = graph_masks(7, true);
    std::vector<std::uint64_t> a, b;
    const double s = seconds([&] { a = canonical_keys(7, masks); });
    const double p = seconds([&] { b = canonical_keys_parallel(7, masks); });
    report("canonical keys, connected n=7", s, p, a == b);
  }
  {
    const VerifyOptions options{.n_min = 1, .n_max = 6, .connected_only = false, .dedup = false};
    VerifyReport a, b;
    const double s = seconds([&] { a = verify_range(options); });
    const double p = seconds([&] { b = verify_range_parallel(options); });
    report("verify_range, all graphs n<=6", s, p, a.orders == b.orders && a.failures == b.failures);
  }
  {
    std::vector<Graph> graphs;
    for (std::uint64_t seed = 0; seed < 8; ++seed)
      graphs.push_back(random_triangle_free(400, 0.05, seed));
    bool same = true;
    std::vector<std::optional<ModuleWitness>> a(graphs.size()), b(graphs.size());
    const double s = seconds([&] {
      for (std::size_t i = 0; i < graphs.size(); ++i)
        a[i] = find_nonstable_homogeneous_set(graphs[i]);
    });
    const double p = seconds([&] {
      for (std::size_t i = 0; i < graphs.size(); ++i)
        b[i] = find_nonstable_homogeneous_set_parallel(graphs[i]);
    });
    same = a == b;
    report("module search, 8 triangle-free n=400", s, p, same);
  }
  return 0;
}
