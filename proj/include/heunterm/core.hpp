#ifndef HEUNTERM_CORE_HPP_
#define HEUNTERM_CORE_HPP_

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace heunterm {

using Complex = std::complex<double>;

/// Invalid input or contract violation (bad parameters, unsupported range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A lower hypergeometric parameter hit a nonpositive integer inside the
/// summation range. Carries which parameter and at which term index.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, std::string parameter, long term_index)
      : DomainError(what),
        parameter_(std::move(parameter)),
        term_index_(term_index) {}

  const std::string& parameter() const { return parameter_; }
  long term_index() const { return term_index_; }

 private:
  std::string parameter_;
  long term_index_;
};

/// The forward recurrence cannot be solved because some R_n vanishes.
class DegenerateRecurrenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series did not meet its tolerance within the allowed number of terms.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Lexicographic (re, im) order; the canonical order for reported roots.
inline bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

/// z^n for integer n >= 0 by repeated multiplication; safe at z = 0 where
/// the complex std::pow would produce NaN via 0 * log 0.
inline Complex integer_power(Complex z, int n) {
  Complex acc(1.0);
  for (int k = 0; k < n; ++k) acc *= z;
  return acc;
}

/// If x is within tol of a nonpositive integer -m, returns m >= 0; else -1.
inline long nonpositive_integer_near(Complex x, double tol = 1e-12) {
  if (std::abs(x.imag()) > tol) return -1;
  const double r = x.real();
  if (r > tol) return -1;
  const long m = std::lround(-r);
  if (m < 0) return -1;
  return std::abs(r + static_cast<double>(m)) <= tol ? m : -1;
}

}  // namespace heunterm

#endif  // HEUNTERM_CORE_HPP_
