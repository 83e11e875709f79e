// Times the visibility relation: serial pairwise reference against the
// sweep kernel on one thread and on all threads.
//
//   bench_visibility [steps...]      (default: 250 500 1000 2000)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tguard/generator.hpp"
#include "tguard/visibility.hpp"

using h_clock = std::chrono::steady_clock;

template <typename F>
static double seconds(F&& f) {
  const auto t0 = h_clock::now();
  f();
  return std::chrono::duration<double>(h_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  std::vector<long> sizes;
  for (int i = 1; i < argc; ++i) sizes.push_back(std::strtol(argv[i], nullptr, 10));
  if (sizes.empty()) sizes = {250, 500, 1000, 2000};

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("%8s %8s %12s %12s %12s %8s\n", "steps", "pairs", "reference", "sweep/1",
              "sweep/all", "same");
  for (long steps : sizes) {
    const tguard::Terrain t = tguard::random_terrain({.seed = 42, .steps = steps});
    tguard::VisibilityRelation ref;
    tguard::VisibilityRelation one;
    tguard::VisibilityRelation all;
    const double t_ref = seconds([&] { ref = tguard::visibility_relation_reference(t); });
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    const double t_one = seconds([&] { one = tguard::visibility_relation(t); });
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    const double t_all = seconds([&] { all = tguard::visibility_relation(t); });
    std::printf("%8ld %8zu %11.4fs %11.4fs %9.4fs/%d %8s\n", steps, ref.pairs.size(), t_ref,
                t_one, t_all, threads, (ref == one && one == all) ? "yes" : "NO");
  }
  return 0;
}
