#ifndef HEUNTERM_SRC_TERMINATION_COMMON_HPP_
#define HEUNTERM_SRC_TERMINATION_COMMON_HPP_

#include <functional>
#include <span>
#include <vector>

#include "heunterm/combinatorics.hpp"
#include "heunterm/params.hpp"
#include "heunterm/polynomial.hpp"
#include "heunterm/tridiagonal.hpp"

namespace heunterm::detail {

// Recurrence rows as a function of the row index; the bound parameter set
// (including its q) is captured by the callable.
using RecurrenceFn = std::function<RecurrenceTriple(int)>;

// Leading (N+1)x(N+1) minor of the recurrence matrix. rec_q0 must be bound to
// q = 0 so its Q values equal Qtilde = Q + q.
TridiagonalBand termination_band(const RecurrenceFn& rec_q0, int n);

// d_0..d_count with d_0 = 1 by forward substitution of the three-term
// recurrence. rec is bound to the actual q.
std::vector<Complex> forward_coefficients(const RecurrenceFn& rec, int count);

// d_n as a polynomial in q, from the same forward substitution run over
// polynomial coefficients (Q_n = Qtilde_n - q).
Polynomial coefficient_polynomial(const RecurrenceFn& rec_q0, int n);

// Largest n with |d_n| above rel_threshold * max_k |d_k|.
int effective_order(std::span<const Complex> d, double rel_threshold);

// Everything derived from one admissible q: coefficients, the polynomial
// A(x) = sum_n d_n x(x-1)..(x-n+1) built over the effective order, and its
// negated roots e_i in lexicographic order.
struct AssembledSolution {
  Complex q{};
  std::vector<Complex> d;
  Polynomial a_poly;
  std::vector<Complex> e;
  bool reduced_order = false;
  int effective_order = 0;
};

AssembledSolution assemble_solution(const RecurrenceFn& rec_at_q, int n, Complex q);

}  // namespace heunterm::detail

#endif  // HEUNTERM_SRC_TERMINATION_COMMON_HPP_
