#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "heunterm/random.hpp"
#include "heunterm/sweep.hpp"
#include "test_support.hpp"

using heunterm::Complex;
using heunterm::Equation;
using heunterm::GridPoint;
using heunterm::SweepConfig;
using heunterm::TrialRecord;
using heunterm::TrialStatus;

namespace {

double lattice_distance(Complex x, int lo, int hi) {
  double d = 1e300;
  for (int k = lo; k <= hi; ++k) d = std::min(d, std::abs(x - Complex(static_cast<double>(k))));
  return d;
}

}  // namespace

TEST_CASE("parameter samplers respect their rejection margins") {
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    const int order = static_cast<int>(seed % 5);
    const heunterm::GeneralHeunParams g = heunterm::sample_general_parameters(seed, order);
    CHECK(std::abs(g.a) >= 0.0999);
    CHECK(std::abs(g.a - Complex(1.0)) >= 0.0999);
    CHECK(lattice_distance(g.alpha, -(order + 1), 0) >= 0.0999);
    CHECK(lattice_distance(g.beta, -(order + 1), 0) >= 0.0999);
    // gamma must clear every integer its shifted bases and oracle can reach
    CHECK(lattice_distance(g.gamma, -40, order) >= 0.0999);
    CHECK(g.epsilon == Complex(static_cast<double>(-order)));
    CHECK(g.q == Complex(0.0));
    CHECK_NOTHROW(g.validate());

    const heunterm::ConfluentHeunParams c = heunterm::sample_confluent_parameters(seed, order);
    CHECK(lattice_distance(c.alpha, -(order + 1), 0) >= 0.0999);
    CHECK(lattice_distance(c.gamma, -40, order) >= 0.0999);
    CHECK(std::abs(c.epsilon) >= 0.0999);
    CHECK(c.delta == Complex(static_cast<double>(-order)));
    CHECK_NOTHROW(c.validate());
  }

  // seeding is the whole identity of a draw
  const auto g1 = heunterm::sample_general_parameters(42, 2);
  const auto g2 = heunterm::sample_general_parameters(42, 2);
  CHECK(g1.a == g2.a);
  CHECK(g1.alpha == g2.alpha);
  CHECK(g1.beta == g2.beta);
  CHECK(g1.gamma == g2.gamma);
  const auto g3 = heunterm::sample_general_parameters(43, 2);
  CHECK((g1.a != g3.a || g1.alpha != g3.alpha || g1.gamma != g3.gamma));

  CHECK_THROWS_AS(heunterm::sample_general_parameters(1, -1), heunterm::DomainError);
}

TEST_CASE("trial seeds separate orders and trials") {
  std::vector<std::uint64_t> seen;
  for (int order = 0; order < 4; ++order)
    for (int trial = 0; trial < 8; ++trial) seen.push_back(heunterm::trial_seed(99, order, trial));
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
  CHECK(heunterm::trial_seed(99, 1, 2) != heunterm::trial_seed(99, 2, 1));
  CHECK(heunterm::trial_seed(99, 1, 2) == heunterm::trial_seed(99, 1, 2));
  CHECK(heunterm::trial_seed(98, 1, 2) != heunterm::trial_seed(99, 1, 2));
}

TEST_CASE("serial and parallel sweeps produce identical passing records") {
  SweepConfig cfg;
  cfg.equation = Equation::general;
  cfg.n_min = 0;
  cfg.n_max = 2;
  cfg.trials_per_order = 6;
  cfg.seed = 12345;

  const std::vector<TrialRecord> serial = run_sweep_serial(cfg);
  const std::vector<TrialRecord> parallel = run_sweep_parallel(cfg);
  REQUIRE(serial.size() == 18);
  CHECK(records_equal(serial, parallel));
  for (const TrialRecord& r : serial) {
    CAPTURE(r.order);
    CAPTURE(r.trial);
    CAPTURE(r.note);
    CHECK(r.status == TrialStatus::pass);
    CHECK(r.solution_count == r.order + 1);
  }

  const heunterm::SweepSummary sum = summarize_sweep(serial);
  REQUIRE(sum.orders.size() == 3);
  CHECK(sum.passed == 18);
  CHECK(sum.failed == 0);
  CHECK(sum.degenerate == 0);
  CHECK(sum.all_pass());
  for (const auto& os : sum.orders) {
    CHECK(os.trials == 6);
    CHECK(os.passed == 6);
    CHECK(os.worst.closure_next <= 1e-10);
    CHECK(os.worst.max_ode_residual <= 1e-8);
    CHECK(os.worst.oracle_max_deviation <= 1e-10);
  }

  // a record mismatch is detected
  std::vector<TrialRecord> tampered = serial;
  tampered[3].solution_count += 1;
  CHECK_FALSE(records_equal(serial, tampered));
  tampered = serial;
  tampered.pop_back();
  CHECK_FALSE(records_equal(serial, tampered));
}

TEST_CASE("confluent sweep covers higher orders and stays green") {
  SweepConfig cfg;
  cfg.equation = Equation::confluent;
  cfg.n_min = 0;
  cfg.n_max = 3;
  cfg.trials_per_order = 5;
  cfg.seed = 777;

  const std::vector<TrialRecord> serial = run_sweep_serial(cfg);
  const std::vector<TrialRecord> parallel = run_sweep_parallel(cfg);
  REQUIRE(serial.size() == 20);
  CHECK(records_equal(serial, parallel));
  for (const TrialRecord& r : serial) {
    CAPTURE(r.order);
    CAPTURE(r.trial);
    CAPTURE(r.note);
    CHECK(r.status == TrialStatus::pass);
  }
  CHECK(summarize_sweep(serial).all_pass());
}

TEST_CASE("summary arithmetic over handcrafted records") {
  std::vector<TrialRecord> recs(5);
  recs[0] = {0, 0, TrialStatus::pass, 1, {}, ""};
  recs[1] = {0, 1, TrialStatus::fail, 1, {}, "boom"};
  recs[2] = {1, 0, TrialStatus::degenerate, 0, {}, "lattice"};
  recs[3] = {1, 1, TrialStatus::pass, 2, {}, ""};
  recs[4] = {1, 2, TrialStatus::pass, 2, {}, ""};
  recs[3].worst.max_ode_residual = 3e-9;
  recs[4].worst.max_ode_residual = 5e-9;

  const heunterm::SweepSummary sum = summarize_sweep(recs);
  CHECK(sum.passed == 3);
  CHECK(sum.failed == 1);
  CHECK(sum.degenerate == 1);
  CHECK_FALSE(sum.all_pass());
  REQUIRE(sum.orders.size() == 2);
  CHECK(sum.orders[0].trials == 2);
  CHECK(sum.orders[1].trials == 3);
  CHECK(sum.orders[1].degenerate == 1);
  CHECK(sum.orders[1].worst.max_ode_residual == 5e-9);
}

TEST_CASE("evaluation grid classifies singular and distant points") {
  const heunterm::GeneralHeunParams base = heunterm::sample_general_parameters(7, 2);
  const auto sols = heunterm::general::terminate(base, 2);
  REQUIRE(sols.size() == 3);
  const auto& t = sols[0];

  const std::vector<Complex> zs{Complex(0.0), Complex(1.0), base.a, Complex(0.25, -0.2),
                                Complex(2.0, 0.8)};
  const std::vector<GridPoint> grid = heunterm::evaluate_grid_serial(t, zs);
  REQUIRE(grid.size() == zs.size());

  // the expansion point itself is singular for the equation but fine for the series
  CHECK(grid[0].singular);
  CHECK(grid[0].evaluated);
  CHECK(testsup::close(grid[0].phi, Complex(1.0), 1e-14));
  CHECK(grid[0].ode_residual == 0.0);

  CHECK(grid[1].singular);
  CHECK_FALSE(grid[1].evaluated);
  CHECK(grid[2].singular);
  CHECK_FALSE(grid[2].evaluated);

  CHECK_FALSE(grid[3].singular);
  CHECK(grid[3].evaluated);
  CHECK_FALSE(grid[3].outside_disk);
  CHECK(grid[3].ode_residual <= 1e-8);

  // beyond the convergence disk the point is reported, not trusted
  CHECK(grid[4].evaluated);
  CHECK(grid[4].outside_disk);
  CHECK(grid[4].ode_residual == 0.0);

  CHECK(grids_equal(grid, heunterm::evaluate_grid_parallel(t, zs)));
  std::vector<GridPoint> other = grid;
  other[3].phi += Complex(1e-12);
  CHECK_FALSE(grids_equal(grid, other));

  // confluent grids reach far out without losing the residual certificate
  const heunterm::ConfluentHeunParams cbase = heunterm::sample_confluent_parameters(11, 2);
  const auto csols = heunterm::confluent::terminate(cbase, 2);
  REQUIRE(csols.size() == 3);
  const std::vector<Complex> czs{Complex(0.0), Complex(1.0), Complex(2.8, -1.0),
                                 Complex(0.4, 0.3)};
  const std::vector<GridPoint> cgrid = heunterm::evaluate_grid_serial(csols[1], czs);
  CHECK(cgrid[0].singular);
  CHECK(cgrid[0].evaluated);
  CHECK(cgrid[1].singular);
  CHECK_FALSE(cgrid[1].evaluated);
  CHECK(cgrid[2].evaluated);
  CHECK_FALSE(cgrid[2].outside_disk);
  CHECK(cgrid[2].ode_residual <= 1e-8);
  CHECK(cgrid[3].ode_residual <= 1e-8);
  CHECK(grids_equal(cgrid, heunterm::evaluate_grid_parallel(csols[1], czs)));
}

TEST_CASE("sweep configuration is validated before any work") {
  SweepConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 1;
  CHECK_THROWS_AS(cfg.validate(), heunterm::DomainError);
  cfg = SweepConfig{};
  cfg.n_min = -1;
  CHECK_THROWS_AS(cfg.validate(), heunterm::DomainError);
  cfg = SweepConfig{};
  cfg.trials_per_order = 0;
  CHECK_THROWS_AS(cfg.validate(), heunterm::DomainError);
  cfg = SweepConfig{};
  cfg.window.max_terms = 0;
  CHECK_THROWS_AS(run_sweep_serial(cfg), heunterm::DomainError);
}
