#ifndef HEUNTERM_FROBENIUS_HPP_
#define HEUNTERM_FROBENIUS_HPP_

#include <span>
#include <vector>

#include "heunterm/params.hpp"

namespace heunterm::oracle {

/// Power-series branch of an equation solution around z = 0, computed by
/// substituting sum c_n z^(n+exponent) straight into the differential
/// equation. This module shares no code with the expansion solvers: it exists
/// to cross-check them.
struct FrobeniusSeries {
  std::vector<Complex> coefficients;  // c_0 .. c_n_max, c_0 = 1
  Complex exponent{};                 // 0 for the analytic branch built here

  Complex value(Complex z) const;
  Complex derivative(Complex z) const;
  Complex second_derivative(Complex z) const;
};

/// Analytic branch at z = 0 of
///   f'' + (gamma/z + delta/(z-1) + epsilon/(z-a)) f'
///      + (alpha*beta*z - q) / (z (z-1) (z-a)) f = 0.
/// Clearing denominators yields the coefficient recurrence
///   a (n+1)(n+gamma) c_{n+1}
///     = [n((1+a)(n-1) + gamma(1+a) + delta*a + epsilon) + q] c_n
///       - [(n-1)(n-2+gamma+delta+epsilon) + alpha*beta] c_{n-1},
/// run forward from c_0 = 1; needs gamma away from nonpositive integers
/// below n_max.
FrobeniusSeries frobenius_general(const GeneralHeunParams& p, int n_max);

/// Analytic branch at z = 0 of
///   f'' + (epsilon + gamma/z + delta/(z-1)) f'
///      + (epsilon*alpha*z - q) / (z (z-1)) f = 0,
/// via
///   (n+1)(n+gamma) c_{n+1}
///     = [n(n-1) + (gamma+delta-epsilon) n - q] c_n + epsilon (n-1+alpha) c_{n-1},
/// run forward from c_0 = 1.
FrobeniusSeries frobenius_confluent(const ConfluentHeunParams& p, int n_max);

/// Forward recursion can amplify roundoff geometrically whenever the wanted
/// branch grows slower than the generic recurrence mode (for the general
/// equation the terminating branch is analytic at z = a, so everything the
/// rounding injects can outrun it by up to |1/a|^n). These variants propagate
/// a first-order bound on the absolute error of each coefficient alongside
/// the recursion itself. A coefficient whose bound exceeds what a comparison
/// needs carries no information at that tolerance, and the caller should skip
/// it rather than trust it.
struct BoundedFrobeniusSeries {
  FrobeniusSeries series;
  std::vector<double> error_bound;  // absolute, per coefficient

  /// true when coefficient n is accurate to rel_tol relative to its own size
  bool trusted(int n, double rel_tol) const {
    const std::size_t u = static_cast<std::size_t>(n);
    return error_bound[u] <=
           rel_tol * std::abs(series.coefficients[u]);
  }
};

BoundedFrobeniusSeries frobenius_general_bounded(const GeneralHeunParams& p, int n_max);
BoundedFrobeniusSeries frobenius_confluent_bounded(const ConfluentHeunParams& p, int n_max);

/// Worst residual of the coefficient recurrence across a supplied coefficient
/// list, including the c_0 = 1 seed row, normalized by the largest row scale
/// (a normwise backward-error measure). Zero in exact arithmetic exactly when
/// the list is the analytic branch, and each row is checked locally, so
/// nothing accumulates along the recursion the way a term-by-term comparison
/// against a forward-recursed reference would. Rows are not held to their own
/// scale: the accessory parameter is only determined to machine precision and
/// its defect lands in rows whose scale can sit orders below the peak.
double recurrence_row_residual(const GeneralHeunParams& p, std::span<const Complex> c);
double recurrence_row_residual(const ConfluentHeunParams& p, std::span<const Complex> c);

/// Plugs the given value/derivative triple into the differential operator.
/// Throws DomainError within 1e-8 of a finite singular point.
Complex ode_residual_general(const GeneralHeunParams& p, Complex z, Complex phi,
                             Complex dphi, Complex d2phi);
Complex ode_residual_confluent(const ConfluentHeunParams& p, Complex z, Complex phi,
                               Complex dphi, Complex d2phi);

/// |residual| / max(|phi|, |phi'|, |phi''|, 1).
double relative_residual(Complex residual, Complex phi, Complex dphi, Complex d2phi);

}  // namespace heunterm::oracle

#endif  // HEUNTERM_FROBENIUS_HPP_
