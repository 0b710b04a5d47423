#ifndef HEUNTERM_SWEEP_HPP_
#define HEUNTERM_SWEEP_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heunterm/verification.hpp"

namespace heunterm {

enum class Equation { general, confluent };

/// Randomized verification sweep: for each order in [n_min, n_max] draw
/// trials_per_order parameter sets, solve, and run the verification block on
/// every solution. Trials are seeded individually, so the parallel and serial
/// drivers produce bit-identical records.
struct SweepConfig {
  Equation equation = Equation::general;
  int n_min = 0;
  int n_max = 2;
  int trials_per_order = 50;
  std::uint64_t seed = 0;
  SeriesWindow window{};
  VerificationThresholds thresholds{};

  void validate() const;
};

enum class TrialStatus { pass, fail, degenerate };

struct TrialRecord {
  int order = 0;
  int trial = 0;
  TrialStatus status = TrialStatus::pass;
  int solution_count = 0;
  SolutionVerification worst{};  // per-metric maxima across the trial's solutions
  std::string note;
};

bool records_equal(const std::vector<TrialRecord>& a, const std::vector<TrialRecord>& b);

std::vector<TrialRecord> run_sweep_serial(const SweepConfig& config);
/// OpenMP over trials when compiled with it; identical output either way.
std::vector<TrialRecord> run_sweep_parallel(const SweepConfig& config);

struct OrderSummary {
  int order = 0;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  int degenerate = 0;
  SolutionVerification worst{};
};

struct SweepSummary {
  std::vector<OrderSummary> orders;
  int passed = 0;
  int failed = 0;
  int degenerate = 0;

  bool all_pass() const { return failed == 0; }
};

SweepSummary summarize_sweep(const std::vector<TrialRecord>& records);

/// Random admissible parameter sets used by the sweep, drawn from the box
/// re in [-3, 3], im in [-1, 1] and re-drawn while within 0.1 of a value that
/// degenerates the expansion (a near 0 or 1; alpha, beta, gamma near the
/// integer lattice points touched by the recurrence or the oracle; small
/// epsilon). The seed alone determines the result.
GeneralHeunParams sample_general_parameters(std::uint64_t seed, int order);
ConfluentHeunParams sample_confluent_parameters(std::uint64_t seed, int order);

/// One grid point of a solution evaluation. residual is meaningful only when
/// evaluated is set and singular is not.
struct GridPoint {
  Complex z{};
  Complex phi{};
  Complex dphi{};
  Complex d2phi{};
  double ode_residual = 0.0;
  bool evaluated = false;
  bool singular = false;
  bool outside_disk = false;
};

std::vector<GridPoint> evaluate_grid_serial(const general::Termination& t,
                                            std::span<const Complex> z,
                                            const SeriesWindow& window = {});
std::vector<GridPoint> evaluate_grid_serial(const confluent::Termination& t,
                                            std::span<const Complex> z,
                                            const SeriesWindow& window = {});
std::vector<GridPoint> evaluate_grid_parallel(const general::Termination& t,
                                              std::span<const Complex> z,
                                              const SeriesWindow& window = {});
std::vector<GridPoint> evaluate_grid_parallel(const confluent::Termination& t,
                                              std::span<const Complex> z,
                                              const SeriesWindow& window = {});

bool grids_equal(const std::vector<GridPoint>& a, const std::vector<GridPoint>& b);

}  // namespace heunterm

#endif  // HEUNTERM_SWEEP_HPP_
