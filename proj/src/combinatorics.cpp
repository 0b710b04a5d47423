#include "heunterm/combinatorics.hpp"

#include <cstddef>

namespace heunterm {

Complex pochhammer(Complex x, int n) {
  if (n < 0) throw DomainError("pochhammer order must be >= 0");
  Complex acc(1.0);
  for (int k = 0; k < n; ++k) acc *= x + static_cast<double>(k);
  return acc;
}

long long binomial_coefficient(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("binomial_coefficient needs 0 <= k <= n");
  k = std::min(k, n - k);
  long long acc = 1;
  for (int j = 1; j <= k; ++j) {
    // acc * (n - k + j) is divisible by j at every step
    long long num;
    if (__builtin_mul_overflow(acc, static_cast<long long>(n - k + j), &num))
      throw DomainError("binomial_coefficient overflow");
    acc = num / j;
  }
  return acc;
}

namespace {

// Rows of unsigned Stirling numbers of the first kind, built on demand via
// s(n+1, k) = s(n, k-1) + n * s(n, k). Row n has entries k = 0..n.
std::vector<long long> stirling_row(int n) {
  std::vector<long long> row{1};  // n = 0
  for (int m = 0; m < n; ++m) {
    std::vector<long long> next(static_cast<std::size_t>(m) + 2, 0);
    for (int k = 0; k <= m + 1; ++k) {
      long long v = (k >= 1) ? row[static_cast<std::size_t>(k - 1)] : 0;
      if (k <= m) {
        long long scaled;
        if (__builtin_mul_overflow(static_cast<long long>(m), row[static_cast<std::size_t>(k)], &scaled) ||
            __builtin_add_overflow(v, scaled, &v))
          throw DomainError("stirling_first overflow; order too large");
      }
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

long long stirling_first(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("stirling_first needs n, k >= 0");
  if (k > n) return 0;
  return stirling_row(n)[static_cast<std::size_t>(k)];
}

Polynomial falling_factorial_poly(int n) {
  if (n < 0) throw DomainError("falling_factorial_poly order must be >= 0");
  Polynomial p = Polynomial::constant(Complex(1.0));
  for (int j = 0; j < n; ++j)
    p = p * Polynomial::linear(Complex(-static_cast<double>(j)), Complex(1.0));
  return p;
}

Polynomial a_polynomial_from_expansion(std::span<const Complex> d) {
  if (d.empty()) throw DomainError("a_polynomial_from_expansion needs at least d_0");
  const int m = static_cast<int>(d.size()) - 1;
  std::vector<Complex> a(d.size(), Complex(0.0));
  for (int n = 0; n <= m; ++n) {
    const std::vector<long long> row = stirling_row(n);
    for (int k = 0; k <= n; ++k) {
      const double sgn = ((n - k) % 2 == 0) ? 1.0 : -1.0;
      a[static_cast<std::size_t>(k)] +=
          sgn * static_cast<double>(row[static_cast<std::size_t>(k)]) * d[static_cast<std::size_t>(n)];
    }
  }
  return Polynomial(std::move(a));
}

}  // namespace heunterm
