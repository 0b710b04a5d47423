#include "heunterm/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace heunterm {

namespace {

// Parlett-Reinsch balancing: a diagonal similarity with power-of-two scales
// that roughly equalizes row and column norms, which keeps the QR eigenvalues
// of lopsided companion matrices accurate.
void balance(Eigen::MatrixXcd& a) {
  const double radix = 2.0;
  const auto n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      double g = r / radix;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) *= 1.0 / f;
        a.col(i) *= f;
      }
    }
  }
}

double residual_scale(const Polynomial& p, Complex r) {
  double scale = 0.0;
  double pw = 1.0;
  const double ar = std::abs(r);
  for (const Complex& c : p.coefficients()) {
    scale += std::abs(c) * pw;
    pw *= ar;
  }
  return scale;
}

std::vector<Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  // Numerically stable complex quadratic: pick the sign that avoids
  // cancellation in -b -+ sqrt(disc), then pair via the product of roots.
  if (c == Complex(0.0)) return {Complex(0.0), -b / a};
  const Complex disc = std::sqrt(b * b - 4.0 * a * c);
  const Complex u = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc)
                                                            : -0.5 * (b - disc);
  return {u / a, c / u};
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& p, double tol) {
  if (p.is_zero()) throw DomainError("poly_roots: zero polynomial has no defined root set");
  const int deg = p.degree();
  if (deg < 1) throw DomainError("poly_roots: constant polynomial has no roots");
  for (const Complex& c : p.coefficients())
    if (!is_finite(c)) throw DomainError("poly_roots: non-finite coefficient");

  std::vector<Complex> roots;
  if (deg == 1) {
    roots = {-p.coefficient(0) / p.coefficient(1)};
  } else if (deg == 2) {
    roots = quadratic_roots(p.coefficient(2), p.coefficient(1), p.coefficient(0));
  } else {
    const Polynomial m = p.monic();
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = Complex(1.0);
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -m.coefficient(i);
    balance(comp);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
      throw ConvergenceError("poly_roots: eigenvalue iteration failed");
    roots.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + deg);

    const Polynomial dp = p.derivative();
    for (Complex& r : roots) {
      const Complex slope = dp(r);
      if (std::abs(slope) > 0.0) {
        const Complex polished = r - p(r) / slope;
        if (is_finite(polished) && std::abs(p(polished)) <= std::abs(p(r))) r = polished;
      }
    }
  }

  for (const Complex& r : roots) {
    if (!is_finite(r)) throw ConvergenceError("poly_roots: non-finite root");
    if (std::abs(p(r)) > tol * residual_scale(p, r))
      throw ConvergenceError("poly_roots: residual check failed");
  }
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

}  // namespace heunterm
