#ifndef HEUNTERM_COMBINATORICS_HPP_
#define HEUNTERM_COMBINATORICS_HPP_

#include <span>
#include <vector>

#include "heunterm/core.hpp"
#include "heunterm/polynomial.hpp"

namespace heunterm {

/// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1. n must be >= 0.
Complex pochhammer(Complex x, int n);

/// Exact C(n, k) in integer arithmetic. Throws on overflow or bad arguments.
long long binomial_coefficient(int n, int k);

/// Unsigned Stirling number of the first kind: the coefficient magnitude in
/// x(x-1)...(x-n+1) = sum_k (-1)^{n-k} s(n,k) x^k. Exact; throws on overflow.
long long stirling_first(int n, int k);

/// The polynomial x(x-1)...(x-n+1) of degree n (1 for n = 0).
Polynomial falling_factorial_poly(int n);

/// Given expansion coefficients d_0..d_M over the falling-factorial basis,
/// returns the same function as an ordinary polynomial,
///   A(x) = sum_n d_n * x(x-1)...(x-n+1),
/// assembled coefficient-wise through the Stirling triangle rather than by
/// expanding each basis product.
Polynomial a_polynomial_from_expansion(std::span<const Complex> d);

}  // namespace heunterm

#endif  // HEUNTERM_COMBINATORICS_HPP_
