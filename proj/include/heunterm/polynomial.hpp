#ifndef HEUNTERM_POLYNOMIAL_HPP_
#define HEUNTERM_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "heunterm/core.hpp"

namespace heunterm {

/// Dense univariate polynomial over Complex, coefficients in ascending order.
/// Exactly-zero leading coefficients are trimmed; no epsilon snapping is ever
/// applied, so degrees are stable under the algebra used here.
class Polynomial {
 public:
  Polynomial() : coeff_{Complex(0.0)} {}
  explicit Polynomial(std::vector<Complex> coefficients);
  Polynomial(std::initializer_list<Complex> coefficients);

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  /// c0 + c1*x
  static Polynomial linear(Complex c0, Complex c1) { return Polynomial({c0, c1}); }

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  bool is_zero() const { return coeff_.size() == 1 && coeff_[0] == Complex(0.0); }
  Complex coefficient(int k) const;
  Complex leading() const { return coeff_.back(); }
  const std::vector<Complex>& coefficients() const { return coeff_; }

  Complex operator()(Complex x) const;  // Horner
  Polynomial derivative() const;
  /// p(c0 + c1*x), used to recenter characteristic polynomials.
  Polynomial compose_linear(Complex c0, Complex c1) const;
  /// p / leading coefficient; DomainError on the zero polynomial.
  Polynomial monic() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(Complex scalar) const;
  Polynomial operator-() const;

  bool operator==(const Polynomial& rhs) const { return coeff_ == rhs.coeff_; }

 private:
  void trim();
  std::vector<Complex> coeff_;
};

inline Polynomial operator*(Complex scalar, const Polynomial& p) { return p * scalar; }

}  // namespace heunterm

#endif  // HEUNTERM_POLYNOMIAL_HPP_
