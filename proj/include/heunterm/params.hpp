#ifndef HEUNTERM_PARAMS_HPP_
#define HEUNTERM_PARAMS_HPP_

#include "heunterm/core.hpp"

namespace heunterm {

/// One row of a three-term recurrence, R_n d_n + Q_{n-1} d_{n-1} + P_{n-2} d_{n-2} = 0.
struct RecurrenceTriple {
  Complex R{};
  Complex Q{};
  Complex P{};
};

/// Parameters of the equation with regular singular points at 0, 1, a and
/// infinity:
///   f'' + (gamma/z + delta/(z-1) + epsilon/(z-a)) f'
///      + (alpha*beta*z - q) / (z (z-1) (z-a)) f = 0,
/// subject to gamma + delta + epsilon = alpha + beta + 1.
struct GeneralHeunParams {
  Complex a{};
  Complex q{};
  Complex alpha{};
  Complex beta{};
  Complex gamma{};
  Complex delta{};
  Complex epsilon{};

  /// Throws DomainError when a is at 0 or 1, any entry is non-finite, or the
  /// exponent-sum constraint is violated beyond 1e-12.
  void validate() const;
};

/// Builds a parameter set with delta derived from the exponent-sum constraint.
GeneralHeunParams general_params(Complex a, Complex q, Complex alpha, Complex beta,
                                 Complex gamma, Complex epsilon);

/// Parameters of the equation with regular singular points at 0 and 1 and an
/// irregular one at infinity:
///   f'' + (epsilon + gamma/z + delta/(z-1)) f'
///      + (epsilon*alpha*z - q) / (z (z-1)) f = 0.
/// epsilon = 0 degenerates to a different equation class and is rejected.
struct ConfluentHeunParams {
  Complex q{};
  Complex alpha{};
  Complex gamma{};
  Complex delta{};
  Complex epsilon{};

  void validate() const;
};

ConfluentHeunParams confluent_params(Complex q, Complex alpha, Complex gamma,
                                     Complex delta, Complex epsilon);

}  // namespace heunterm

#endif  // HEUNTERM_PARAMS_HPP_
