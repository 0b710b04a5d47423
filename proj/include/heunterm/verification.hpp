#ifndef HEUNTERM_VERIFICATION_HPP_
#define HEUNTERM_VERIFICATION_HPP_

#include <cstdint>
#include <vector>

#include "heunterm/heun_confluent.hpp"
#include "heunterm/heun_general.hpp"

namespace heunterm {

inline constexpr std::uint64_t kDefaultGridSeed = 0x5EEDC0DEULL;

/// Pinned pass thresholds for the verification block. These are fixed
/// contract values, not tuning knobs.
struct VerificationThresholds {
  double closure_rel = 1e-10;      // |d_{N+1}|, |d_{N+2}| vs max |d_n|
  double eigenvector_rel = 1e-9;   // row residual vs matrix scale
  double ode_rel = 1e-8;           // residual vs max(|phi|,|phi'|,|phi''|,1)
  double oracle_rel = 1e-10;       // deviation vs oracle coefficients and rows, n <= 25
};

/// Independent checks attached to every reported solution: the recurrence
/// closes (the two coefficients past d_N vanish), d is an eigenvector of the
/// minor matrix, the series solves the differential equation on a sample
/// grid, and its Taylor coefficients match the independently derived
/// power-series oracle. The oracle metric pairs per-row residuals of the
/// oracle's recurrence (local, conditioning-free) with term-by-term
/// comparison on rows whose forward error bound certifies the reference.
/// Grid points where cancellation would drown the ode_rel threshold are
/// resampled; ode_points counts the accepted ones.
struct SolutionVerification {
  double closure_next = 0.0;
  double closure_next2 = 0.0;
  double eigenvector_residual = 0.0;
  double max_ode_residual = 0.0;
  double oracle_max_deviation = 0.0;
  int ode_points = 0;

  bool pass(const VerificationThresholds& thr = {}) const {
    return closure_next <= thr.closure_rel && closure_next2 <= thr.closure_rel &&
           eigenvector_residual <= thr.eigenvector_rel &&
           max_ode_residual <= thr.ode_rel && oracle_max_deviation <= thr.oracle_rel;
  }
};

/// Sample points for residual checks: inside the convergence disk, at least
/// 0.1 away from every finite singular point.
std::vector<Complex> ode_sample_points(const GeneralHeunParams& p, int count,
                                       std::uint64_t seed = kDefaultGridSeed);
std::vector<Complex> ode_sample_points(const ConfluentHeunParams& p, int count,
                                       std::uint64_t seed = kDefaultGridSeed);

SolutionVerification verify_solution(const general::Termination& t,
                                     const SeriesWindow& window = {},
                                     std::uint64_t seed = kDefaultGridSeed);
SolutionVerification verify_solution(const confluent::Termination& t,
                                     const SeriesWindow& window = {},
                                     std::uint64_t seed = kDefaultGridSeed);

}  // namespace heunterm

#endif  // HEUNTERM_VERIFICATION_HPP_
