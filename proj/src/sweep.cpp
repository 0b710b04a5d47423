#include "heunterm/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "heunterm/frobenius.hpp"
#include "heunterm/random.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heunterm {

namespace {

// Redraw margin around degenerate parameter values. Points closer than this
// make conditioning of the trial unbounded, which would turn the sweep into a
// test of floating point luck instead of the solver.
constexpr double kMargin = 0.1;

bool near_integer_at_most(Complex x, int ceiling) {
  const double nearest = std::round(x.real());
  if (nearest > static_cast<double>(ceiling)) return false;
  return std::abs(x - Complex(nearest)) < kMargin;
}

Complex draw_box(SplitMix64& rng) { return rng.uniform_box(-3.0, 3.0, -1.0, 1.0); }

Complex draw_avoiding(SplitMix64& rng, const std::function<bool(Complex)>& reject) {
  for (int tries = 0; tries < 10000; ++tries) {
    const Complex x = draw_box(rng);
    if (!reject(x)) return x;
  }
  throw DomainError("parameter sampling rejection loop did not terminate");
}

SolutionVerification merge_worst(const SolutionVerification& a, const SolutionVerification& b) {
  SolutionVerification w;
  w.closure_next = std::max(a.closure_next, b.closure_next);
  w.closure_next2 = std::max(a.closure_next2, b.closure_next2);
  w.eigenvector_residual = std::max(a.eigenvector_residual, b.eigenvector_residual);
  w.max_ode_residual = std::max(a.max_ode_residual, b.max_ode_residual);
  w.oracle_max_deviation = std::max(a.oracle_max_deviation, b.oracle_max_deviation);
  w.ode_points = std::max(a.ode_points, b.ode_points);
  return w;
}

TrialRecord run_trial(const SweepConfig& cfg, int order, int trial) {
  TrialRecord rec;
  rec.order = order;
  rec.trial = trial;
  const std::uint64_t seed = trial_seed(cfg.seed, order, trial);
  const std::uint64_t grid_seed = seed ^ kDefaultGridSeed;
  try {
    bool all_pass = true;
    if (cfg.equation == Equation::general) {
      const GeneralHeunParams base = sample_general_parameters(seed, order);
      const std::vector<general::Termination> sols = general::terminate(base, order);
      rec.solution_count = static_cast<int>(sols.size());
      for (const general::Termination& t : sols) {
        const SolutionVerification v = verify_solution(t, cfg.window, grid_seed);
        rec.worst = merge_worst(rec.worst, v);
        all_pass = all_pass && v.pass(cfg.thresholds);
      }
    } else {
      const ConfluentHeunParams base = sample_confluent_parameters(seed, order);
      const std::vector<confluent::Termination> sols = confluent::terminate(base, order);
      rec.solution_count = static_cast<int>(sols.size());
      for (const confluent::Termination& t : sols) {
        const SolutionVerification v = verify_solution(t, cfg.window, grid_seed);
        rec.worst = merge_worst(rec.worst, v);
        all_pass = all_pass && v.pass(cfg.thresholds);
      }
    }
    rec.status = all_pass ? TrialStatus::pass : TrialStatus::fail;
    if (!all_pass) rec.note = "verification threshold exceeded";
  } catch (const DegenerateRecurrenceError& err) {
    rec.status = TrialStatus::degenerate;
    rec.note = err.what();
  } catch (const std::exception& err) {
    rec.status = TrialStatus::fail;
    rec.note = err.what();
  }
  return rec;
}

bool verification_equal(const SolutionVerification& a, const SolutionVerification& b) {
  return a.closure_next == b.closure_next && a.closure_next2 == b.closure_next2 &&
         a.eigenvector_residual == b.eigenvector_residual &&
         a.max_ode_residual == b.max_ode_residual &&
         a.oracle_max_deviation == b.oracle_max_deviation && a.ode_points == b.ode_points;
}

template <class Term, class ResidualFn>
GridPoint grid_point(const Term& t, Complex z, const SeriesWindow& w,
                     const std::vector<Complex>& singular_points, const ResidualFn& residual) {
  GridPoint gp;
  gp.z = z;
  double dist = 1e300;
  for (const Complex& s : singular_points) dist = std::min(dist, std::abs(z - s));
  gp.singular = dist < 1e-6;
  // At z = 0 the series still evaluates (every term but the first vanishes);
  // at the other singular points the series boundary is touched, so skip.
  if (gp.singular && std::abs(z) >= 1e-6) return gp;
  try {
    const SeriesDerivatives f = solution_derivatives(t, z, w);
    gp.phi = f.value;
    gp.dphi = f.d1;
    gp.d2phi = f.d2;
    gp.outside_disk = f.outside_disk;
    gp.evaluated = true;
    if (!gp.singular && !gp.outside_disk)
      gp.ode_residual = oracle::relative_residual(residual(t.params, z, f), f.value, f.d1, f.d2);
  } catch (const std::exception&) {
    gp.evaluated = false;
  }
  return gp;
}

template <class Term, class ResidualFn>
std::vector<GridPoint> grid_impl(const Term& t, std::span<const Complex> z,
                                 const SeriesWindow& w,
                                 const std::vector<Complex>& singular_points,
                                 const ResidualFn& residual, bool parallel) {
  std::vector<GridPoint> out(z.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(z.size()); ++i)
      out[static_cast<std::size_t>(i)] =
          grid_point(t, z[static_cast<std::size_t>(i)], w, singular_points, residual);
  } else {
    for (std::size_t i = 0; i < z.size(); ++i)
      out[i] = grid_point(t, z[i], w, singular_points, residual);
  }
  return out;
}

Complex general_residual(const GeneralHeunParams& p, Complex z, const SeriesDerivatives& f) {
  return oracle::ode_residual_general(p, z, f.value, f.d1, f.d2);
}

Complex confluent_residual(const ConfluentHeunParams& p, Complex z, const SeriesDerivatives& f) {
  return oracle::ode_residual_confluent(p, z, f.value, f.d1, f.d2);
}

}  // namespace

void SweepConfig::validate() const {
  if (n_min < 0 || n_max < n_min) throw DomainError("sweep needs 0 <= n_min <= n_max");
  if (trials_per_order < 1) throw DomainError("sweep needs at least one trial per order");
  window.validate();
}

GeneralHeunParams sample_general_parameters(std::uint64_t seed, int order) {
  if (order < 0) throw DomainError("order must be >= 0");
  SplitMix64 rng(seed);
  const Complex a = draw_avoiding(rng, [](Complex x) {
    return std::abs(x) < kMargin || std::abs(x - Complex(1.0)) < kMargin;
  });
  const auto reject_lattice = [order](Complex x) {
    const double nearest = std::round(x.real());
    return nearest <= 0.0 && nearest >= -static_cast<double>(order + 1) &&
           std::abs(x - Complex(nearest)) < kMargin;
  };
  const Complex alpha = draw_avoiding(rng, reject_lattice);
  const Complex beta = draw_avoiding(rng, reject_lattice);
  const Complex gamma = draw_avoiding(
      rng, [order](Complex x) { return near_integer_at_most(x, order); });
  return general_params(a, Complex(0.0), alpha, beta, gamma,
                        Complex(-static_cast<double>(order)));
}

ConfluentHeunParams sample_confluent_parameters(std::uint64_t seed, int order) {
  if (order < 0) throw DomainError("order must be >= 0");
  SplitMix64 rng(seed);
  const auto reject_lattice = [order](Complex x) {
    const double nearest = std::round(x.real());
    return nearest <= 0.0 && nearest >= -static_cast<double>(order + 1) &&
           std::abs(x - Complex(nearest)) < kMargin;
  };
  const Complex alpha = draw_avoiding(rng, reject_lattice);
  const Complex gamma = draw_avoiding(
      rng, [order](Complex x) { return near_integer_at_most(x, order); });
  const Complex epsilon =
      draw_avoiding(rng, [](Complex x) { return std::abs(x) < kMargin; });
  return confluent_params(Complex(0.0), alpha, gamma, Complex(-static_cast<double>(order)),
                          epsilon);
}

std::vector<TrialRecord> run_sweep_serial(const SweepConfig& config) {
  config.validate();
  std::vector<TrialRecord> records;
  records.reserve(static_cast<std::size_t>(config.n_max - config.n_min + 1) *
                  static_cast<std::size_t>(config.trials_per_order));
  for (int order = config.n_min; order <= config.n_max; ++order)
    for (int trial = 0; trial < config.trials_per_order; ++trial)
      records.push_back(run_trial(config, order, trial));
  return records;
}

std::vector<TrialRecord> run_sweep_parallel(const SweepConfig& config) {
  config.validate();
  const int orders = config.n_max - config.n_min + 1;
  const long long total =
      static_cast<long long>(orders) * static_cast<long long>(config.trials_per_order);
  std::vector<TrialRecord> records(static_cast<std::size_t>(total));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long idx = 0; idx < total; ++idx) {
    const int order = config.n_min + static_cast<int>(idx / config.trials_per_order);
    const int trial = static_cast<int>(idx % config.trials_per_order);
    records[static_cast<std::size_t>(idx)] = run_trial(config, order, trial);
  }
  return records;
}

bool records_equal(const std::vector<TrialRecord>& a, const std::vector<TrialRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].order != b[i].order || a[i].trial != b[i].trial || a[i].status != b[i].status ||
        a[i].solution_count != b[i].solution_count || a[i].note != b[i].note ||
        !verification_equal(a[i].worst, b[i].worst))
      return false;
  }
  return true;
}

SweepSummary summarize_sweep(const std::vector<TrialRecord>& records) {
  SweepSummary summary;
  for (const TrialRecord& rec : records) {
    OrderSummary* row = nullptr;
    for (OrderSummary& existing : summary.orders)
      if (existing.order == rec.order) row = &existing;
    if (row == nullptr) {
      summary.orders.push_back(OrderSummary{});
      row = &summary.orders.back();
      row->order = rec.order;
    }
    row->trials += 1;
    row->worst = merge_worst(row->worst, rec.worst);
    switch (rec.status) {
      case TrialStatus::pass:
        row->passed += 1;
        summary.passed += 1;
        break;
      case TrialStatus::fail:
        row->failed += 1;
        summary.failed += 1;
        break;
      case TrialStatus::degenerate:
        row->degenerate += 1;
        summary.degenerate += 1;
        break;
    }
  }
  std::sort(summary.orders.begin(), summary.orders.end(),
            [](const OrderSummary& x, const OrderSummary& y) { return x.order < y.order; });
  return summary;
}

std::vector<GridPoint> evaluate_grid_serial(const general::Termination& t,
                                            std::span<const Complex> z,
                                            const SeriesWindow& window) {
  const std::vector<Complex> sing = {Complex(0.0), Complex(1.0), t.params.a};
  return grid_impl(t, z, window, sing, general_residual, false);
}

std::vector<GridPoint> evaluate_grid_serial(const confluent::Termination& t,
                                            std::span<const Complex> z,
                                            const SeriesWindow& window) {
  const std::vector<Complex> sing = {Complex(0.0), Complex(1.0)};
  return grid_impl(t, z, window, sing, confluent_residual, false);
}

std::vector<GridPoint> evaluate_grid_parallel(const general::Termination& t,
                                              std::span<const Complex> z,
                                              const SeriesWindow& window) {
  const std::vector<Complex> sing = {Complex(0.0), Complex(1.0), t.params.a};
  return grid_impl(t, z, window, sing, general_residual, true);
}

std::vector<GridPoint> evaluate_grid_parallel(const confluent::Termination& t,
                                              std::span<const Complex> z,
                                              const SeriesWindow& window) {
  const std::vector<Complex> sing = {Complex(0.0), Complex(1.0)};
  return grid_impl(t, z, window, sing, confluent_residual, true);
}

namespace {

// Bit-pattern equality. The comparator asserts determinism, and values at
// outside-disk points can be non-finite by design; operator== would declare
// two identical NaNs different.
bool same_bits(double x, double y) {
  return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
}

bool same_bits(Complex x, Complex y) {
  return same_bits(x.real(), y.real()) && same_bits(x.imag(), y.imag());
}

}  // namespace

bool grids_equal(const std::vector<GridPoint>& a, const std::vector<GridPoint>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_bits(a[i].z, b[i].z) || !same_bits(a[i].phi, b[i].phi) ||
        !same_bits(a[i].dphi, b[i].dphi) || !same_bits(a[i].d2phi, b[i].d2phi) ||
        !same_bits(a[i].ode_residual, b[i].ode_residual) ||
        a[i].evaluated != b[i].evaluated || a[i].singular != b[i].singular ||
        a[i].outside_disk != b[i].outside_disk)
      return false;
  }
  return true;
}

}  // namespace heunterm
