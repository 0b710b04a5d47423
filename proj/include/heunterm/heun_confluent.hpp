#ifndef HEUNTERM_HEUN_CONFLUENT_HPP_
#define HEUNTERM_HEUN_CONFLUENT_HPP_

#include <vector>

#include "heunterm/params.hpp"
#include "heunterm/pfq.hpp"
#include "heunterm/polynomial.hpp"
#include "heunterm/tridiagonal.hpp"

namespace heunterm::confluent {

/// Row n of the three-term recurrence tied to the expansion
/// Phi = sum_n d_n u_n with u_n = z^n (d/dz)^n 1F1(alpha; gamma; -epsilon z).
RecurrenceTriple recurrence(const ConfluentHeunParams& p, int n);

/// Leading (N+1)x(N+1) minor of the recurrence matrix, in q.
TridiagonalBand termination_band(const ConfluentHeunParams& base, int n);

/// d_n of the expansion as a polynomial in q (q in base is ignored).
Polynomial coefficient_polynomial_in_q(const ConfluentHeunParams& base, int n);

/// See general::Termination; the solution here is an (N+1)F(N+1) series in
/// -epsilon z, which converges in the whole plane.
struct Termination {
  int order = 0;
  ConfluentHeunParams params;
  std::vector<Complex> q_admissible;
  Complex chosen_q{};
  std::vector<Complex> d;
  Polynomial a_poly;
  std::vector<Complex> e;
  PFqSpec solution;
  bool reduced_order = false;
  int effective_order = 0;
};

/// All terminating expansions of order N: requires delta = -N (within 1e-12)
/// and alpha away from the integer lattice points that zero the leading
/// recurrence coefficients. The q field of base is ignored.
std::vector<Termination> terminate(const ConfluentHeunParams& base, int n);

/// Order-3 termination solved through the quartic coefficient polynomial
/// d_4(q) = 0 instead of the minor determinant; the admissible q set is the
/// same up to root-finding error.
std::vector<Termination> terminate_n3(const ConfluentHeunParams& base);

/// u_n(z) = z^n (-epsilon)^n (alpha)_n / (gamma)_n * 1F1(alpha+n; gamma+n; -epsilon z).
Complex basis_function(const ConfluentHeunParams& p, int n, Complex z,
                       const SeriesWindow& window = {});

/// Residual of the contiguous relation
///   epsilon z (alpha+n-1) u_{n-1} + (gamma+n-1+epsilon z) u_n + u_{n+1};
/// identically zero in exact arithmetic for n >= 1.
Complex basis_recurrence_residual(const ConfluentHeunParams& p, int n, Complex z,
                                  const SeriesWindow& window = {});

/// Max absolute row residual of (minor matrix - q I) applied to d.
double eigenvector_residual(const Termination& t);

/// Scale for normalizing the eigenvector residual: max |matrix entry| * max |d_n|.
double eigenvector_scale(const Termination& t);

enum class BasisShift {
  alpha,  // expansion over 1F1(alpha+n; gamma; -epsilon z)
  gamma,  // expansion over 1F1(alpha; gamma-n; -epsilon z)
};

/// Re-expands the terminating solution over a shifted-parameter basis.
std::vector<Complex> convert_basis(const Termination& t, BasisShift shift);

/// Phi(z) through the pole-safe ratio form of the solution spec.
SeriesValue solution_value(const Termination& t, Complex z, const SeriesWindow& window = {});

/// Phi, Phi', Phi'' in one pass; derivatives are summed term-wise.
SeriesDerivatives solution_derivatives(const Termination& t, Complex z,
                                       const SeriesWindow& window = {});

}  // namespace heunterm::confluent

#endif  // HEUNTERM_HEUN_CONFLUENT_HPP_
