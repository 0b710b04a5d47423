#ifndef HEUNTERM_ROOTS_HPP_
#define HEUNTERM_ROOTS_HPP_

#include <vector>

#include "heunterm/core.hpp"
#include "heunterm/polynomial.hpp"

namespace heunterm {

/// All complex roots of p, sorted lexicographically by (re, im). Degrees 1 and
/// 2 use closed forms; higher degrees go through a balanced companion matrix
/// with a Newton polish per root. Each returned root r satisfies
///   |p(r)| <= tol * sum_k |c_k| |r|^k,
/// otherwise a ConvergenceError is thrown. The zero polynomial and constants
/// are rejected.
std::vector<Complex> poly_roots(const Polynomial& p, double tol = 1e-9);

}  // namespace heunterm

#endif  // HEUNTERM_ROOTS_HPP_
