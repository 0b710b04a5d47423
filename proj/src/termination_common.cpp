#include "termination_common.hpp"

#include <algorithm>
#include <cmath>

#include "heunterm/roots.hpp"

namespace heunterm::detail {

TridiagonalBand termination_band(const RecurrenceFn& rec_q0, int n) {
  if (n < 0) throw DomainError("termination order must be >= 0");
  TridiagonalBand band;
  band.diag.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    const RecurrenceTriple row = rec_q0(m);
    band.diag.push_back(Polynomial::linear(row.Q, Complex(-1.0)));
    if (m < n) {
      band.sub.push_back(rec_q0(m).P);
      band.super.push_back(rec_q0(m + 1).R);
    }
  }
  band.validate();
  return band;
}

std::vector<Complex> forward_coefficients(const RecurrenceFn& rec, int count) {
  if (count < 0) throw DomainError("coefficient count must be >= 0");
  std::vector<Complex> d(static_cast<std::size_t>(count) + 1);
  d[0] = Complex(1.0);
  for (int n = 1; n <= count; ++n) {
    Complex rhs = -rec(n - 1).Q * d[static_cast<std::size_t>(n - 1)];
    if (n >= 2) rhs -= rec(n - 2).P * d[static_cast<std::size_t>(n - 2)];
    const Complex r = rec(n).R;
    const Complex dn = rhs / r;
    if (!is_finite(dn))
      throw DegenerateRecurrenceError("recurrence coefficient R_n vanishes; expansion breaks down");
    d[static_cast<std::size_t>(n)] = dn;
  }
  return d;
}

Polynomial coefficient_polynomial(const RecurrenceFn& rec_q0, int n) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  Polynomial dm1 = Polynomial::constant(Complex(1.0));  // d_0
  Polynomial dm2;                                       // d_{-1} = 0
  for (int m = 1; m <= n; ++m) {
    const Complex r = rec_q0(m).R;
    if (std::abs(r) == 0.0)
      throw DegenerateRecurrenceError("recurrence coefficient R_n vanishes; expansion breaks down");
    // Q_{m-1}(q) = Qtilde_{m-1} - q
    const Polynomial q_poly = Polynomial::linear(rec_q0(m - 1).Q, Complex(-1.0));
    Polynomial dm = q_poly * dm1;
    if (m >= 2) dm = dm + Polynomial::constant(rec_q0(m - 2).P) * dm2;
    dm = dm * (Complex(-1.0) / r);
    dm2 = std::move(dm1);
    dm1 = std::move(dm);
  }
  return dm1;
}

int effective_order(std::span<const Complex> d, double rel_threshold) {
  double peak = 0.0;
  for (const Complex& v : d) peak = std::max(peak, std::abs(v));
  int order = 0;
  for (int n = static_cast<int>(d.size()) - 1; n >= 0; --n) {
    if (std::abs(d[static_cast<std::size_t>(n)]) > rel_threshold * peak) {
      order = n;
      break;
    }
  }
  return order;
}

AssembledSolution assemble_solution(const RecurrenceFn& rec_at_q, int n, Complex q) {
  AssembledSolution out;
  out.q = q;
  out.d = forward_coefficients(rec_at_q, n);
  out.effective_order = effective_order(out.d, 1e-10);
  out.reduced_order = out.effective_order < n;
  out.a_poly = a_polynomial_from_expansion(
      std::span<const Complex>(out.d).first(static_cast<std::size_t>(out.effective_order) + 1));
  if (out.a_poly.degree() >= 1) {
    out.e = poly_roots(out.a_poly);
    for (Complex& root : out.e) root = -root;
    std::sort(out.e.begin(), out.e.end(), lex_less);
  }
  return out;
}

}  // namespace heunterm::detail
