// Times the verification sweep and a dense grid evaluation on both execution
// paths and checks that they give bit-identical results. Usage:
//   bench_sweep [trials-per-order] [n-max] [grid-points]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "heunterm/sweep.hpp"

using namespace heunterm;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 40;
  const int n_max = argc > 2 ? std::atoi(argv[2]) : 3;
  const int grid_points = argc > 3 ? std::atoi(argv[3]) : 20000;

#ifdef _OPENMP
  std::printf("openmp: yes, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp: no (parallel path falls back to serial)\n");
#endif

  bool all_equal = true;
  for (const Equation eq : {Equation::general, Equation::confluent}) {
    SweepConfig cfg;
    cfg.equation = eq;
    cfg.n_min = 0;
    cfg.n_max = n_max;
    cfg.trials_per_order = trials;
    cfg.seed = 42;

    auto t0 = std::chrono::steady_clock::now();
    const std::vector<TrialRecord> serial = run_sweep_serial(cfg);
    const double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const std::vector<TrialRecord> parallel = run_sweep_parallel(cfg);
    const double parallel_ms = ms_since(t0);

    const bool equal = records_equal(serial, parallel);
    all_equal = all_equal && equal;
    const SweepSummary summary = summarize_sweep(serial);
    std::printf("sweep %-9s orders 0..%d x %d trials: serial %8.1f ms, parallel %8.1f ms, "
                "speedup %.2fx, pass %d fail %d degenerate %d, identical: %s\n",
                eq == Equation::general ? "general" : "confluent", n_max, trials, serial_ms,
                parallel_ms, serial_ms / parallel_ms, summary.passed, summary.failed,
                summary.degenerate, equal ? "yes" : "NO");
  }

  {
    const ConfluentHeunParams base = sample_confluent_parameters(7, 2);
    const std::vector<confluent::Termination> sols = confluent::terminate(base, 2);
    std::vector<Complex> zs;
    zs.reserve(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i)
      zs.emplace_back(-3.0 + 6.0 * i / (grid_points - 1.0), 0.25);

    auto t0 = std::chrono::steady_clock::now();
    const std::vector<GridPoint> serial = evaluate_grid_serial(sols[0], zs);
    const double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const std::vector<GridPoint> parallel = evaluate_grid_parallel(sols[0], zs);
    const double parallel_ms = ms_since(t0);

    const bool equal = grids_equal(serial, parallel);
    all_equal = all_equal && equal;
    std::printf("grid  confluent N=2, %d points: serial %8.1f ms, parallel %8.1f ms, "
                "speedup %.2fx, identical: %s\n",
                grid_points, serial_ms, parallel_ms, serial_ms / parallel_ms,
                equal ? "yes" : "NO");
  }

  return all_equal ? 0 : 1;
}
