#include "heunterm/heun_general.hpp"

#include <cmath>
#include <sstream>

#include "heunterm/combinatorics.hpp"
#include "heunterm/roots.hpp"
#include "termination_common.hpp"

namespace heunterm::general {

namespace {

detail::RecurrenceFn bind_recurrence(GeneralHeunParams p) {
  return [p](int n) { return recurrence(p, n); };
}

GeneralHeunParams with_q(GeneralHeunParams p, Complex q) {
  p.q = q;
  return p;
}

// R_n = a n (n + alpha - 1)(n + beta - 1) vanishes for 1 <= n <= order when
// alpha or beta sits on {0, -1, ..., -(order-1)}; the expansion coefficients
// are then not determined by forward substitution.
void reject_lattice_degeneracy(const GeneralHeunParams& p, int order) {
  for (int n = 1; n <= order; ++n) {
    const double offset = static_cast<double>(n - 1);
    if (std::abs(p.alpha + Complex(offset)) < 1e-10 ||
        std::abs(p.beta + Complex(offset)) < 1e-10) {
      std::ostringstream msg;
      msg << "alpha or beta at " << (1 - n)
          << " zeroes the leading recurrence coefficient R_" << n;
      throw DegenerateRecurrenceError(msg.str());
    }
  }
}

}  // namespace

RecurrenceTriple recurrence(const GeneralHeunParams& p, int n) {
  if (n < 0) throw DomainError("recurrence index must be >= 0");
  const Complex nn(static_cast<double>(n));
  RecurrenceTriple row;
  row.R = p.a * nn * (nn + p.alpha - Complex(1.0)) * (nn + p.beta - Complex(1.0));
  row.Q = p.a * (nn + p.alpha) * (nn + p.beta) +
          (p.a - Complex(1.0)) * nn * (nn + p.epsilon - Complex(1.0)) - p.gamma * nn - p.q;
  row.P = (p.a - Complex(1.0)) * (nn + p.epsilon);
  return row;
}

TridiagonalBand termination_band(const GeneralHeunParams& base, int n) {
  base.validate();
  return detail::termination_band(bind_recurrence(with_q(base, Complex(0.0))), n);
}

Polynomial coefficient_polynomial_in_q(const GeneralHeunParams& base, int n) {
  base.validate();
  return detail::coefficient_polynomial(bind_recurrence(with_q(base, Complex(0.0))), n);
}

std::vector<Termination> terminate(const GeneralHeunParams& base, int n) {
  if (n < 0) throw DomainError("termination order must be >= 0");
  base.validate();
  if (std::abs(base.epsilon + Complex(static_cast<double>(n))) > 1e-12) {
    std::ostringstream msg;
    msg << "termination at order " << n << " requires epsilon = " << -n;
    throw DomainError(msg.str());
  }
  reject_lattice_degeneracy(base, n);

  const TridiagonalBand band =
      detail::termination_band(bind_recurrence(with_q(base, Complex(0.0))), n);
  const Polynomial char_poly = continuant_char_poly(band);
  const std::vector<Complex> q_roots = poly_roots(char_poly);

  std::vector<Termination> out;
  out.reserve(q_roots.size());
  for (const Complex& q : q_roots) {
    const GeneralHeunParams at_q = with_q(base, q);
    detail::AssembledSolution sol = detail::assemble_solution(bind_recurrence(at_q), n, q);
    Termination t;
    t.order = n;
    t.params = at_q;
    t.q_admissible = q_roots;
    t.chosen_q = q;
    t.d = std::move(sol.d);
    t.a_poly = std::move(sol.a_poly);
    t.e = std::move(sol.e);
    t.reduced_order = sol.reduced_order;
    t.effective_order = sol.effective_order;
    PFqSpec spec;
    spec.upper = {base.alpha, base.beta};
    spec.lower = {base.gamma};
    spec.omega = Complex(1.0);
    t.solution = augment_parameters(std::move(spec), t.e);
    out.push_back(std::move(t));
  }
  return out;
}

Complex basis_function(const GeneralHeunParams& p, int n, Complex z,
                       const SeriesWindow& window) {
  if (n < 0) throw DomainError("basis index must be >= 0");
  p.validate();
  const long m = nonpositive_integer_near(p.gamma, 1e-12);
  if (m >= 0 && m < n)
    throw PoleError("basis prefactor divides by (gamma)_n = 0", "gamma", m);
  PFqSpec shifted;
  const Complex nn(static_cast<double>(n));
  shifted.upper = {p.alpha + nn, p.beta + nn};
  shifted.lower = {p.gamma + nn};
  shifted.omega = Complex(1.0);
  const Complex pref =
      pochhammer(p.alpha, n) * pochhammer(p.beta, n) / pochhammer(p.gamma, n);
  return integer_power(z, n) * pref * pfq_eval(shifted, z, window).value;
}

Complex basis_recurrence_residual(const GeneralHeunParams& p, int n, Complex z,
                                  const SeriesWindow& window) {
  if (n < 2) throw DomainError("the contiguous relation needs n >= 2");
  const Complex un = basis_function(p, n, z, window);
  const Complex un1 = basis_function(p, n - 1, z, window);
  const Complex un2 = basis_function(p, n - 2, z, window);
  const Complex nn(static_cast<double>(n));
  return (z - Complex(1.0)) * un +
         ((p.alpha + p.beta + Complex(2.0) * nn - Complex(3.0)) * z - p.gamma - nn +
          Complex(2.0)) *
             un1 +
         z * (nn + p.alpha - Complex(2.0)) * (nn + p.beta - Complex(2.0)) * un2;
}

double eigenvector_residual(const Termination& t) {
  const int n = t.order;
  double worst = 0.0;
  for (int m = 0; m <= n; ++m) {
    Complex row = recurrence(t.params, m).Q * t.d[static_cast<std::size_t>(m)];
    if (m >= 1) row += recurrence(t.params, m - 1).P * t.d[static_cast<std::size_t>(m - 1)];
    if (m < n) row += recurrence(t.params, m + 1).R * t.d[static_cast<std::size_t>(m + 1)];
    worst = std::max(worst, std::abs(row));
  }
  return worst;
}

double eigenvector_scale(const Termination& t) {
  const int n = t.order;
  double entry = 0.0;
  for (int m = 0; m <= n; ++m) {
    const RecurrenceTriple row = recurrence(t.params, m);
    entry = std::max(entry, std::abs(row.Q));
    if (m >= 1) entry = std::max(entry, std::abs(row.R));
    if (m < n) entry = std::max(entry, std::abs(row.P));
  }
  double dmax = 0.0;
  for (const Complex& v : t.d) dmax = std::max(dmax, std::abs(v));
  return std::max(entry, 1.0) * std::max(dmax, 1.0);
}

std::vector<Complex> convert_basis(const Termination& t, BasisShift shift) {
  const int n = t.order;
  const GeneralHeunParams& p = t.params;
  if (shift == BasisShift::alpha) {
    const long m = nonpositive_integer_near(p.alpha, 1e-12);
    if (m >= 0 && m < n)
      throw PoleError("conversion weight divides by (alpha)_k = 0", "alpha", m);
  } else {
    for (int g = 1; g <= n; ++g)
      if (std::abs(p.gamma - Complex(static_cast<double>(g))) < 1e-12)
        throw PoleError("conversion weight divides by (gamma-n)_k = 0", "gamma", g);
  }
  // Upper-triangular weights T[k][j] with u-basis index k and shifted index j:
  // the shifted function number j expands as sum_k T[k][j] u_k. Solving
  // T c = d by back-substitution re-expresses the solution in the shifted basis.
  auto weight = [&](int k, int j) -> Complex {
    const Complex binom(static_cast<double>(binomial_coefficient(j, k)));
    if (shift == BasisShift::alpha) return binom / pochhammer(p.alpha, k);
    return binom / pochhammer(p.gamma - Complex(static_cast<double>(j)), k);
  };
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = n; k >= 0; --k) {
    Complex acc = t.d[static_cast<std::size_t>(k)];
    for (int j = k + 1; j <= n; ++j) acc -= weight(k, j) * c[static_cast<std::size_t>(j)];
    c[static_cast<std::size_t>(k)] = acc / weight(k, k);
  }
  return c;
}

SeriesValue solution_value(const Termination& t, Complex z, const SeriesWindow& window) {
  const Complex upper[2] = {t.params.alpha, t.params.beta};
  const Complex lower[1] = {t.params.gamma};
  return evaluate_ratio_form(upper, lower, Complex(1.0), t.a_poly, z, window);
}

SeriesDerivatives solution_derivatives(const Termination& t, Complex z,
                                       const SeriesWindow& window) {
  const Complex upper[2] = {t.params.alpha, t.params.beta};
  const Complex lower[1] = {t.params.gamma};
  return ratio_form_derivatives(upper, lower, Complex(1.0), t.a_poly, z, window);
}

}  // namespace heunterm::general
