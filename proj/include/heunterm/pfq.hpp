#ifndef HEUNTERM_PFQ_HPP_
#define HEUNTERM_PFQ_HPP_

#include <span>
#include <vector>

#include "heunterm/core.hpp"
#include "heunterm/polynomial.hpp"

namespace heunterm {

/// Truncation policy for series summation: stop once two consecutive terms
/// fall below abs_tol + rel_tol * |partial sum| (checked for every requested
/// derivative order), or fail with ConvergenceError at max_terms.
struct SeriesWindow {
  int max_terms = 10000;
  double abs_tol = 1e-16;
  double rel_tol = 1e-14;

  void validate() const {
    if (max_terms < 1) throw DomainError("series window needs max_terms >= 1");
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0) || (abs_tol == 0.0 && rel_tol == 0.0))
      throw DomainError("series window needs nonnegative tolerances, not both zero");
  }
};

/// Result of a series evaluation. outside_disk is set when a ratio-of-gammas
/// series of the p = q+1 kind was summed at |omega*z| >= 1 without exact
/// termination, in which case value is the truncated partial sum only.
/// cancellation is the ratio of summed term magnitudes to the result scale
/// (floored at 1): near 1 means terms add constructively, a value of 10^k
/// means roughly k digits of the result were lost to cancelling terms.
struct SeriesValue {
  Complex value{};
  int terms_used = 0;
  bool outside_disk = false;
  double error_estimate = 0.0;
  double cancellation = 1.0;
};

/// Value and first two derivatives of a series, summed in one pass.
/// cancellation covers all computed registers: the largest term-magnitude
/// sum over max(1, |value|, |d1|, |d2|).
struct SeriesDerivatives {
  Complex value{};
  Complex d1{};
  Complex d2{};
  int terms_used = 0;
  bool outside_disk = false;
  double error_estimate = 0.0;
  double cancellation = 1.0;
};

/// A generalized hypergeometric series sum_n [prod (upper)_n / prod (lower)_n]
/// (omega z)^n / n!. The trailing augmented_pairs entries of upper/lower are
/// matched (e+1; e) pairs appended by augment_parameters; evaluation falls
/// back to the polynomial ratio form when such a pair sits on a pole.
struct PFqSpec {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  Complex omega{1.0};
  int augmented_pairs = 0;

  int base_upper_count() const { return static_cast<int>(upper.size()) - augmented_pairs; }
  int base_lower_count() const { return static_cast<int>(lower.size()) - augmented_pairs; }
  void validate() const;
};

/// Appends one (e_i + 1; e_i) parameter pair per entry of e. The augmented
/// series carries an extra rational factor prod_i (e_i + n)/e_i on term n.
PFqSpec augment_parameters(PFqSpec spec, std::span<const Complex> e);

/// Taylor coefficients c_0..c_n_max of the series in (z), omega included.
/// Throws PoleError if a lower parameter hits a nonpositive integer in range;
/// callers holding augmented specs should use ratio_form_coefficients then.
std::vector<Complex> pfq_coefficients(const PFqSpec& spec, int n_max);

/// Series value at z. Augmented specs whose pair parameters sit on poles are
/// routed through the ratio form automatically; poles in base parameters
/// raise PoleError naming the parameter and term index.
SeriesValue pfq_eval(const PFqSpec& spec, Complex z, const SeriesWindow& window = {});

/// Derivative of given order (1 or 2) at z, summed term-wise analytically.
SeriesValue pfq_derivative_series(const PFqSpec& spec, Complex z, int order,
                                  const SeriesWindow& window = {});

/// Value plus both derivatives in one pass, with the same routing as pfq_eval.
SeriesDerivatives pfq_eval_derivatives(const PFqSpec& spec, Complex z,
                                       const SeriesWindow& window = {});

/// Ratio-form evaluation: sums the base series with each term scaled by
/// A(n)/A(0). This is the pole-safe route for augmented parameter pairs,
/// since (e)_n ratios reduce to A(n)/A(0) with A(x) = prod_i (x + e_i).
/// A(0) must be nonzero.
SeriesValue evaluate_ratio_form(std::span<const Complex> base_upper,
                                std::span<const Complex> base_lower, Complex omega,
                                const Polynomial& a_poly, Complex z,
                                const SeriesWindow& window = {});

SeriesDerivatives ratio_form_derivatives(std::span<const Complex> base_upper,
                                         std::span<const Complex> base_lower, Complex omega,
                                         const Polynomial& a_poly, Complex z,
                                         const SeriesWindow& window = {});

std::vector<Complex> ratio_form_coefficients(std::span<const Complex> base_upper,
                                             std::span<const Complex> base_lower, Complex omega,
                                             const Polynomial& a_poly, int n_max);

}  // namespace heunterm

#endif  // HEUNTERM_PFQ_HPP_
