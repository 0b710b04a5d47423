#include "heunterm/heun_confluent.hpp"

#include <cmath>
#include <sstream>

#include "heunterm/combinatorics.hpp"
#include "heunterm/roots.hpp"
#include "termination_common.hpp"

namespace heunterm::confluent {

namespace {

detail::RecurrenceFn bind_recurrence(ConfluentHeunParams p) {
  return [p](int n) { return recurrence(p, n); };
}

ConfluentHeunParams with_q(ConfluentHeunParams p, Complex q) {
  p.q = q;
  return p;
}

// R_n = epsilon n (n + alpha - 1) vanishes for 1 <= n <= order when alpha
// sits on {0, -1, ..., -(order-1)}.
void reject_lattice_degeneracy(const ConfluentHeunParams& p, int order) {
  for (int n = 1; n <= order; ++n) {
    if (std::abs(p.alpha + Complex(static_cast<double>(n - 1))) < 1e-10) {
      std::ostringstream msg;
      msg << "alpha at " << (1 - n) << " zeroes the leading recurrence coefficient R_" << n;
      throw DegenerateRecurrenceError(msg.str());
    }
  }
}

void require_delta(const ConfluentHeunParams& base, int order) {
  if (std::abs(base.delta + Complex(static_cast<double>(order))) > 1e-12) {
    std::ostringstream msg;
    msg << "termination at order " << order << " requires delta = " << -order;
    throw DomainError(msg.str());
  }
}

Termination build_termination(const ConfluentHeunParams& base, int order,
                              const std::vector<Complex>& q_roots, Complex q) {
  const ConfluentHeunParams at_q = with_q(base, q);
  detail::AssembledSolution sol = detail::assemble_solution(bind_recurrence(at_q), order, q);
  Termination t;
  t.order = order;
  t.params = at_q;
  t.q_admissible = q_roots;
  t.chosen_q = q;
  t.d = std::move(sol.d);
  t.a_poly = std::move(sol.a_poly);
  t.e = std::move(sol.e);
  t.reduced_order = sol.reduced_order;
  t.effective_order = sol.effective_order;
  PFqSpec spec;
  spec.upper = {base.alpha};
  spec.lower = {base.gamma};
  spec.omega = -base.epsilon;
  t.solution = augment_parameters(std::move(spec), t.e);
  return t;
}

}  // namespace

RecurrenceTriple recurrence(const ConfluentHeunParams& p, int n) {
  if (n < 0) throw DomainError("recurrence index must be >= 0");
  const Complex nn(static_cast<double>(n));
  RecurrenceTriple row;
  row.R = p.epsilon * nn * (nn + p.alpha - Complex(1.0));
  row.Q = nn * (nn + p.epsilon + p.gamma + p.delta - Complex(1.0)) + p.epsilon * p.alpha - p.q;
  row.P = nn + p.delta;
  return row;
}

TridiagonalBand termination_band(const ConfluentHeunParams& base, int n) {
  base.validate();
  return detail::termination_band(bind_recurrence(with_q(base, Complex(0.0))), n);
}

Polynomial coefficient_polynomial_in_q(const ConfluentHeunParams& base, int n) {
  base.validate();
  return detail::coefficient_polynomial(bind_recurrence(with_q(base, Complex(0.0))), n);
}

std::vector<Termination> terminate(const ConfluentHeunParams& base, int n) {
  if (n < 0) throw DomainError("termination order must be >= 0");
  base.validate();
  require_delta(base, n);
  reject_lattice_degeneracy(base, n);

  const TridiagonalBand band =
      detail::termination_band(bind_recurrence(with_q(base, Complex(0.0))), n);
  const Polynomial char_poly = continuant_char_poly(band);
  const std::vector<Complex> q_roots = poly_roots(char_poly);

  std::vector<Termination> out;
  out.reserve(q_roots.size());
  for (const Complex& q : q_roots) out.push_back(build_termination(base, n, q_roots, q));
  return out;
}

std::vector<Termination> terminate_n3(const ConfluentHeunParams& base) {
  base.validate();
  require_delta(base, 3);
  reject_lattice_degeneracy(base, 3);

  const Polynomial quartic =
      detail::coefficient_polynomial(bind_recurrence(with_q(base, Complex(0.0))), 4);
  const std::vector<Complex> q_roots = poly_roots(quartic);

  std::vector<Termination> out;
  out.reserve(q_roots.size());
  for (const Complex& q : q_roots) out.push_back(build_termination(base, 3, q_roots, q));
  return out;
}

Complex basis_function(const ConfluentHeunParams& p, int n, Complex z,
                       const SeriesWindow& window) {
  if (n < 0) throw DomainError("basis index must be >= 0");
  p.validate();
  const long m = nonpositive_integer_near(p.gamma, 1e-12);
  if (m >= 0 && m < n)
    throw PoleError("basis prefactor divides by (gamma)_n = 0", "gamma", m);
  PFqSpec shifted;
  const Complex nn(static_cast<double>(n));
  shifted.upper = {p.alpha + nn};
  shifted.lower = {p.gamma + nn};
  shifted.omega = -p.epsilon;
  const Complex pref =
      integer_power(-p.epsilon, n) * pochhammer(p.alpha, n) / pochhammer(p.gamma, n);
  return integer_power(z, n) * pref * pfq_eval(shifted, z, window).value;
}

Complex basis_recurrence_residual(const ConfluentHeunParams& p, int n, Complex z,
                                  const SeriesWindow& window) {
  if (n < 1) throw DomainError("the contiguous relation needs n >= 1");
  const Complex un1 = basis_function(p, n - 1, z, window);
  const Complex un = basis_function(p, n, z, window);
  const Complex up1 = basis_function(p, n + 1, z, window);
  const Complex nn(static_cast<double>(n));
  return p.epsilon * z * (p.alpha + nn - Complex(1.0)) * un1 +
         (p.gamma + nn - Complex(1.0) + p.epsilon * z) * un + up1;
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
  const ConfluentHeunParams& p = t.params;
  if (shift == BasisShift::alpha) {
    const long m = nonpositive_integer_near(p.alpha, 1e-12);
    if (m >= 0 && m < n)
      throw PoleError("conversion weight divides by (alpha)_k = 0", "alpha", m);
  } else {
    for (int g = 1; g <= n; ++g)
      if (std::abs(p.gamma - Complex(static_cast<double>(g))) < 1e-12)
        throw PoleError("conversion weight divides by (gamma-n)_k = 0", "gamma", g);
  }
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
  const Complex upper[1] = {t.params.alpha};
  const Complex lower[1] = {t.params.gamma};
  return evaluate_ratio_form(upper, lower, -t.params.epsilon, t.a_poly, z, window);
}

SeriesDerivatives solution_derivatives(const Termination& t, Complex z,
                                       const SeriesWindow& window) {
  const Complex upper[1] = {t.params.alpha};
  const Complex lower[1] = {t.params.gamma};
  return ratio_form_derivatives(upper, lower, -t.params.epsilon, t.a_poly, z, window);
}

}  // namespace heunterm::confluent
