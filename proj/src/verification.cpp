#include "heunterm/verification.hpp"

#include <algorithm>
#include <cmath>

#include "heunterm/frobenius.hpp"
#include "heunterm/random.hpp"
#include "termination_common.hpp"

namespace heunterm {

namespace {

constexpr int kOdePoints = 20;
constexpr int kOracleTerms = 25;

// Oracle rows below this relative error bound count as references; the
// forward recursion can lose digits geometrically whenever the terminating
// branch is the minimal solution (|a| < 1), and the bound tracks exactly
// which rows survived that.
constexpr double kTrustRel = 1e-13;

// Reject residual sample points whose cancellation times operator weight
// exceeds this: beyond it, roundoff alone reaches ~1e-11 in the relative
// residual and the ode_rel gate stops measuring anything.
constexpr double kMaxConditioning = 1e4;

// Worst per-term deviation against the error-bounded oracle, restricted to
// rows the oracle certifies. Paired below with the local recurrence-row
// residual, which checks the same identity on every row with no error
// transport along the recursion. The floor tied to the largest trusted
// coefficient keeps roundoff on a near-cancelling term from masquerading
// as disagreement while still exposing real sign or index bugs.
double coefficient_deviation(const std::vector<Complex>& mine,
                             const oracle::BoundedFrobeniusSeries& ref) {
  const std::size_t count = std::min(mine.size(), ref.series.coefficients.size());
  double peak = 1.0;
  for (std::size_t n = 0; n < count; ++n) {
    if (!ref.trusted(static_cast<int>(n), kTrustRel)) continue;
    peak = std::max(peak,
                    std::max(std::abs(mine[n]), std::abs(ref.series.coefficients[n])));
  }
  double worst = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    if (!ref.trusted(static_cast<int>(n), kTrustRel)) continue;
    const double denom = std::max(
        {std::abs(mine[n]), std::abs(ref.series.coefficients[n]), 1e-6 * peak});
    worst = std::max(worst, std::abs(mine[n] - ref.series.coefficients[n]) / denom);
  }
  return worst;
}

// Largest coefficient magnitude of the differential operator at z. The
// relative residual is only resolvable down to roughly machine epsilon
// times the series cancellation times this weight.
double ode_weight(const GeneralHeunParams& p, Complex z) {
  const double first = std::abs(p.gamma / z) + std::abs(p.delta / (z - Complex(1.0))) +
                       std::abs(p.epsilon / (z - p.a));
  const double zeroth = std::abs((p.alpha * p.beta * z - p.q) /
                                 (z * (z - Complex(1.0)) * (z - p.a)));
  return std::max({1.0, first, zeroth});
}

double ode_weight(const ConfluentHeunParams& p, Complex z) {
  const double first = std::abs(p.epsilon) + std::abs(p.gamma / z) +
                       std::abs(p.delta / (z - Complex(1.0)));
  const double zeroth = std::abs((p.epsilon * p.alpha * z - p.q) / (z * (z - Complex(1.0))));
  return std::max({1.0, first, zeroth});
}

struct ClosurePair {
  double next = 0.0;
  double next2 = 0.0;
};

ClosurePair closure_metrics(const detail::RecurrenceFn& rec, int order) {
  const std::vector<Complex> ext = detail::forward_coefficients(rec, order + 2);
  double dmax = 0.0;
  for (int n = 0; n <= order; ++n) dmax = std::max(dmax, std::abs(ext[static_cast<std::size_t>(n)]));
  ClosurePair c;
  c.next = std::abs(ext[static_cast<std::size_t>(order) + 1]) / dmax;
  c.next2 = std::abs(ext[static_cast<std::size_t>(order) + 2]) / dmax;
  return c;
}

}  // namespace

std::vector<Complex> ode_sample_points(const GeneralHeunParams& p, int count,
                                       std::uint64_t seed) {
  if (count < 1) throw DomainError("sample count must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(count));
  int guard = 0;
  while (static_cast<int>(pts.size()) < count) {
    if (++guard > 100000) throw DomainError("could not place sample points away from singularities");
    const double r = rng.uniform(0.15, 0.78);
    const double th = rng.uniform(0.0, 6.283185307179586);
    const Complex z(r * std::cos(th), r * std::sin(th));
    if (std::abs(z - p.a) < 0.1 || std::abs(z - Complex(1.0)) < 0.1) continue;
    pts.push_back(z);
  }
  return pts;
}

std::vector<Complex> ode_sample_points(const ConfluentHeunParams&, int count,
                                       std::uint64_t seed) {
  if (count < 1) throw DomainError("sample count must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(count));
  int guard = 0;
  while (static_cast<int>(pts.size()) < count) {
    if (++guard > 100000) throw DomainError("could not place sample points away from singularities");
    const double r = rng.uniform(0.2, 3.0);
    const double th = rng.uniform(0.0, 6.283185307179586);
    const Complex z(r * std::cos(th), r * std::sin(th));
    if (std::abs(z - Complex(1.0)) < 0.1) continue;
    pts.push_back(z);
  }
  return pts;
}

SolutionVerification verify_solution(const general::Termination& t,
                                     const SeriesWindow& window, std::uint64_t seed) {
  SolutionVerification v;
  const auto rec = [&t](int m) { return general::recurrence(t.params, m); };
  const ClosurePair c = closure_metrics(rec, t.order);
  v.closure_next = c.next;
  v.closure_next2 = c.next2;
  v.eigenvector_residual =
      general::eigenvector_residual(t) / general::eigenvector_scale(t);

  SplitMix64 rng(seed);
  int guard = 0;
  while (v.ode_points < kOdePoints) {
    if (++guard > 100000)
      throw DomainError("could not place well-conditioned residual sample points");
    const double r = rng.uniform(0.15, 0.78);
    const double th = rng.uniform(0.0, 6.283185307179586);
    const Complex z(r * std::cos(th), r * std::sin(th));
    if (std::abs(z - t.params.a) < 0.1 || std::abs(z - Complex(1.0)) < 0.1) continue;
    const SeriesDerivatives f = general::solution_derivatives(t, z, window);
    if (f.cancellation * ode_weight(t.params, z) > kMaxConditioning) continue;
    const Complex res = oracle::ode_residual_general(t.params, z, f.value, f.d1, f.d2);
    v.max_ode_residual =
        std::max(v.max_ode_residual, oracle::relative_residual(res, f.value, f.d1, f.d2));
    ++v.ode_points;
  }

  const Complex upper[2] = {t.params.alpha, t.params.beta};
  const Complex lower[1] = {t.params.gamma};
  const std::vector<Complex> mine =
      ratio_form_coefficients(upper, lower, Complex(1.0), t.a_poly, kOracleTerms);
  const oracle::BoundedFrobeniusSeries ref =
      oracle::frobenius_general_bounded(t.params, kOracleTerms);
  v.oracle_max_deviation = std::max(coefficient_deviation(mine, ref),
                                    oracle::recurrence_row_residual(t.params, mine));
  return v;
}

SolutionVerification verify_solution(const confluent::Termination& t,
                                     const SeriesWindow& window, std::uint64_t seed) {
  SolutionVerification v;
  const auto rec = [&t](int m) { return confluent::recurrence(t.params, m); };
  const ClosurePair c = closure_metrics(rec, t.order);
  v.closure_next = c.next;
  v.closure_next2 = c.next2;
  v.eigenvector_residual =
      confluent::eigenvector_residual(t) / confluent::eigenvector_scale(t);

  SplitMix64 rng(seed);
  int guard = 0;
  while (v.ode_points < kOdePoints) {
    if (++guard > 100000)
      throw DomainError("could not place well-conditioned residual sample points");
    const double r = rng.uniform(0.2, 3.0);
    const double th = rng.uniform(0.0, 6.283185307179586);
    const Complex z(r * std::cos(th), r * std::sin(th));
    if (std::abs(z - Complex(1.0)) < 0.1) continue;
    const SeriesDerivatives f = confluent::solution_derivatives(t, z, window);
    if (f.cancellation * ode_weight(t.params, z) > kMaxConditioning) continue;
    const Complex res = oracle::ode_residual_confluent(t.params, z, f.value, f.d1, f.d2);
    v.max_ode_residual =
        std::max(v.max_ode_residual, oracle::relative_residual(res, f.value, f.d1, f.d2));
    ++v.ode_points;
  }

  const Complex upper[1] = {t.params.alpha};
  const Complex lower[1] = {t.params.gamma};
  const std::vector<Complex> mine =
      ratio_form_coefficients(upper, lower, -t.params.epsilon, t.a_poly, kOracleTerms);
  const oracle::BoundedFrobeniusSeries ref =
      oracle::frobenius_confluent_bounded(t.params, kOracleTerms);
  v.oracle_max_deviation = std::max(coefficient_deviation(mine, ref),
                                    oracle::recurrence_row_residual(t.params, mine));
  return v;
}

}  // namespace heunterm
