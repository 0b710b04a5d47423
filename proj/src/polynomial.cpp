#include "heunterm/polynomial.hpp"

#include <algorithm>

namespace heunterm {

Polynomial::Polynomial(std::vector<Complex> coefficients)
    : coeff_(std::move(coefficients)) {
  if (coeff_.empty()) coeff_.push_back(Complex(0.0));
  trim();
}

Polynomial::Polynomial(std::initializer_list<Complex> coefficients)
    : Polynomial(std::vector<Complex>(coefficients)) {}

void Polynomial::trim() {
  while (coeff_.size() > 1 && coeff_.back() == Complex(0.0)) coeff_.pop_back();
}

Complex Polynomial::coefficient(int k) const {
  if (k < 0) throw DomainError("polynomial coefficient index must be >= 0");
  if (k >= static_cast<int>(coeff_.size())) return Complex(0.0);
  return coeff_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex x) const {
  Complex acc(0.0);
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeff_.size() == 1) return Polynomial();
  std::vector<Complex> out(coeff_.size() - 1);
  for (std::size_t k = 1; k < coeff_.size(); ++k)
    out[k - 1] = coeff_[k] * static_cast<double>(k);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_linear(Complex c0, Complex c1) const {
  const Polynomial arg = Polynomial::linear(c0, c1);
  Polynomial acc;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
    acc = acc * arg + Polynomial::constant(*it);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw DomainError("cannot normalize the zero polynomial");
  const Complex inv = Complex(1.0) / leading();
  return *this * inv;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Complex> out(std::max(coeff_.size(), rhs.coeff_.size()), Complex(0.0));
  for (std::size_t k = 0; k < coeff_.size(); ++k) out[k] += coeff_[k];
  for (std::size_t k = 0; k < rhs.coeff_.size(); ++k) out[k] += rhs.coeff_[k];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Complex> out(coeff_.size() + rhs.coeff_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < coeff_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeff_.size(); ++j)
      out[i + j] += coeff_[i] * rhs.coeff_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(Complex scalar) const {
  std::vector<Complex> out(coeff_);
  for (auto& c : out) c *= scalar;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const { return *this * Complex(-1.0); }

}  // namespace heunterm
