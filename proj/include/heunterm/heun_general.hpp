#ifndef HEUNTERM_HEUN_GENERAL_HPP_
#define HEUNTERM_HEUN_GENERAL_HPP_

#include <vector>

#include "heunterm/params.hpp"
#include "heunterm/pfq.hpp"
#include "heunterm/polynomial.hpp"
#include "heunterm/tridiagonal.hpp"

namespace heunterm::general {

/// Row n of the three-term recurrence tied to the expansion
/// Phi = sum_n d_n u_n with u_n = z^n (d/dz)^n 2F1(alpha, beta; gamma; z).
RecurrenceTriple recurrence(const GeneralHeunParams& p, int n);

/// Leading (N+1)x(N+1) minor of the recurrence matrix, in q.
TridiagonalBand termination_band(const GeneralHeunParams& base, int n);

/// d_n of the expansion as a polynomial in q (q in base is ignored).
Polynomial coefficient_polynomial_in_q(const GeneralHeunParams& base, int n);

/// A terminating expansion for one admissible accessory parameter.
/// params carries the chosen q; d runs d_0..d_N; a_poly is the generating
/// polynomial whose negated roots e pair into the trailing hypergeometric
/// parameters of solution. When trailing d_n vanish numerically the
/// solution is assembled at the smaller effective_order and flagged.
struct Termination {
  int order = 0;
  GeneralHeunParams params;
  std::vector<Complex> q_admissible;
  Complex chosen_q{};
  std::vector<Complex> d;
  Polynomial a_poly;
  std::vector<Complex> e;
  PFqSpec solution;
  bool reduced_order = false;
  int effective_order = 0;
};

/// All terminating expansions of order N: requires epsilon = -N (within
/// 1e-12), alpha and beta away from the integer lattice points that zero the
/// leading recurrence coefficients, and returns one Termination per root of
/// the characteristic polynomial (repeated roots appear repeatedly). The
/// q field of base is ignored.
std::vector<Termination> terminate(const GeneralHeunParams& base, int n);

/// u_n(z) = z^n (alpha)_n (beta)_n / (gamma)_n * 2F1(alpha+n, beta+n; gamma+n; z).
Complex basis_function(const GeneralHeunParams& p, int n, Complex z,
                       const SeriesWindow& window = {});

/// Residual of the contiguous relation
///   (z-1) u_n + ((alpha+beta+2n-3) z - gamma - n + 2) u_{n-1}
///   + z (n+alpha-2)(n+beta-2) u_{n-2};
/// identically zero in exact arithmetic for n >= 2.
Complex basis_recurrence_residual(const GeneralHeunParams& p, int n, Complex z,
                                  const SeriesWindow& window = {});

/// Max absolute row residual of (minor matrix - q I) applied to d.
double eigenvector_residual(const Termination& t);

/// Scale for normalizing the eigenvector residual: max |matrix entry| * max |d_n|.
double eigenvector_scale(const Termination& t);

enum class BasisShift {
  alpha,  // expansion over 2F1(alpha+n, beta; gamma; z)
  gamma,  // expansion over 2F1(alpha, beta; gamma-n; z)
};

/// Re-expands the terminating solution over a shifted-parameter basis;
/// returns the new coefficients (index 0..N). Throws PoleError when the
/// conversion weights degenerate.
std::vector<Complex> convert_basis(const Termination& t, BasisShift shift);

/// Phi(z) through the pole-safe ratio form of the solution spec.
SeriesValue solution_value(const Termination& t, Complex z, const SeriesWindow& window = {});

/// Phi, Phi', Phi'' in one pass; derivatives are summed term-wise.
SeriesDerivatives solution_derivatives(const Termination& t, Complex z,
                                       const SeriesWindow& window = {});

}  // namespace heunterm::general

#endif  // HEUNTERM_HEUN_GENERAL_HPP_
