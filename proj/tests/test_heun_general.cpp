#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "heunterm/heun_general.hpp"
#include "heunterm/pfq.hpp"
#include "test_support.hpp"

using heunterm::Complex;
using heunterm::GeneralHeunParams;
using heunterm::PFqSpec;
namespace gen = heunterm::general;

namespace {

const Complex kA(1.7, 0.2);
const Complex kAlpha(0.6, -0.2);
const Complex kBeta(1.1, 0.4);
const Complex kGamma(1.3, 0.1);

GeneralHeunParams base_params(int order) {
  return heunterm::general_params(kA, Complex(0.0), kAlpha, kBeta, kGamma,
                                  Complex(static_cast<double>(-order)));
}

// n-th derivative of the power series sum c_m z^m, evaluated termwise.
Complex series_derivative(const std::vector<Complex>& c, int n, Complex z) {
  Complex acc(0.0);
  for (std::size_t m = c.size(); m-- > static_cast<std::size_t>(n);) {
    double fall = 1.0;
    for (int j = 0; j < n; ++j) fall *= static_cast<double>(m - static_cast<std::size_t>(j));
    acc = acc * z + fall * c[m];
  }
  return acc;
}

}  // namespace

TEST_CASE("zeroth order forces the hypergeometric reduction") {
  const auto sols = gen::terminate(base_params(0), 0);
  REQUIRE(sols.size() == 1);
  const auto& t = sols[0];
  CHECK(t.order == 0);
  CHECK(t.effective_order == 0);
  CHECK_FALSE(t.reduced_order);
  CHECK(testsup::close(t.chosen_q, kA * kAlpha * kBeta, 1e-13));
  CHECK(t.e.empty());
  CHECK(t.a_poly.degree() == 0);
  CHECK(t.d.size() == 1);
  CHECK(testsup::close(t.d[0], Complex(1.0), 1e-15));

  REQUIRE(t.solution.upper.size() == 2);
  REQUIRE(t.solution.lower.size() == 1);
  CHECK(t.solution.augmented_pairs == 0);
  CHECK(testsup::close(t.solution.omega, Complex(1.0), 1e-15));
  CHECK(testsup::close(t.solution.upper[0], kAlpha, 1e-15));
  CHECK(testsup::close(t.solution.upper[1], kBeta, 1e-15));
  CHECK(testsup::close(t.solution.lower[0], kGamma, 1e-15));

  PFqSpec plain;
  plain.upper = {kAlpha, kBeta};
  plain.lower = {kGamma};
  const Complex z(0.31, -0.22);
  CHECK(testsup::close(gen::solution_value(t, z).value, pfq_eval(plain, z).value, 1e-12));
}

TEST_CASE("each order returns a full spectrum of admissible accessory values") {
  for (int order = 1; order <= 4; ++order) {
    CAPTURE(order);
    const GeneralHeunParams base = base_params(order);
    const auto sols = gen::terminate(base, order);
    REQUIRE(sols.size() == static_cast<std::size_t>(order) + 1);

    // closure polynomial vanishing at each admissible q is the whole point
    const heunterm::Polynomial next = gen::coefficient_polynomial_in_q(base, order + 1);
    for (std::size_t i = 0; i < sols.size(); ++i) {
      const auto& t = sols[i];
      CHECK(t.order == order);
      CHECK(t.params.epsilon == base.epsilon);
      CHECK(t.q_admissible.size() == sols.size());
      CHECK(t.chosen_q == t.q_admissible[i]);
      CHECK(testsup::close(t.params.q, t.chosen_q, 1e-15));
      REQUIRE(t.d.size() == static_cast<std::size_t>(order) + 1);
      CHECK(testsup::close(t.d[0], Complex(1.0), 1e-15));
      CHECK_FALSE(t.reduced_order);
      CHECK(t.effective_order == order);

      double scale = 1.0;
      for (int k = 0; k <= next.degree(); ++k)
        scale = std::max(scale, std::abs(next.coefficient(k)) *
                                    std::pow(std::abs(t.chosen_q), k));
      CHECK(std::abs(next(t.chosen_q)) <= 1e-9 * scale);

      CHECK(gen::eigenvector_residual(t) <= 1e-10 * gen::eigenvector_scale(t));

      // e-parameters are the negated roots of the generating polynomial
      REQUIRE(t.e.size() == static_cast<std::size_t>(t.a_poly.degree()));
      for (const Complex& ei : t.e)
        CHECK(std::abs(t.a_poly(-ei)) <=
              1e-9 * std::max(1.0, std::abs(t.a_poly.coefficient(t.a_poly.degree()))));

      // spec layout: order many augmented pairs behind the 2F1 base
      CHECK(t.solution.augmented_pairs == static_cast<int>(t.e.size()));
      CHECK(t.solution.base_upper_count() == 2);
      CHECK(t.solution.base_lower_count() == 1);
    }

    // admissible values are distinct and lexicographically ordered
    for (std::size_t i = 0; i + 1 < sols.size(); ++i) {
      CHECK(heunterm::lex_less(sols[0].q_admissible[i], sols[0].q_admissible[i + 1]));
      CHECK(std::abs(sols[0].q_admissible[i] - sols[0].q_admissible[i + 1]) > 1e-8);
    }
  }
}

TEST_CASE("termination demands the exponent parameter match the order") {
  GeneralHeunParams p = base_params(2);
  CHECK_THROWS_AS(gen::terminate(p, 1), heunterm::DomainError);
  CHECK_THROWS_AS(gen::terminate(p, -1), heunterm::DomainError);
  p.epsilon = Complex(-2.0, 1e-6);  // off the integer by more than the gate
  CHECK_THROWS_AS(gen::terminate(p, 2), heunterm::DomainError);

  // alpha on the degeneracy lattice kills a leading recurrence coefficient
  GeneralHeunParams degen = heunterm::general_params(kA, Complex(0.0), Complex(-1.0), kBeta,
                                                     kGamma, Complex(-3.0));
  CHECK_THROWS_AS(gen::terminate(degen, 3), heunterm::DegenerateRecurrenceError);
  // but the same alpha is harmless once the order stays below the lattice hit
  GeneralHeunParams ok = heunterm::general_params(kA, Complex(0.0), Complex(-1.0), kBeta,
                                                  kGamma, Complex(-1.0));
  CHECK(gen::terminate(ok, 1).size() == 2);
}

TEST_CASE("expansion basis is the scaled n-th derivative of the hypergeometric") {
  PFqSpec plain;
  plain.upper = {kAlpha, kBeta};
  plain.lower = {kGamma};
  const std::vector<Complex> c = pfq_coefficients(plain, 90);
  const GeneralHeunParams p = base_params(1);

  for (const Complex z : {Complex(0.3, 0.1), Complex(-0.25, 0.2)}) {
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(n);
      const Complex want = heunterm::integer_power(z, n) * series_derivative(c, n, z);
      CHECK(testsup::close(gen::basis_function(p, n, z), want, 1e-12));
    }
  }
}

TEST_CASE("basis members satisfy their contiguous relation") {
  const GeneralHeunParams p = base_params(1);
  const Complex z(0.27, -0.14);
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(std::abs(gen::basis_recurrence_residual(p, n, z)) < 1e-11);
  }
  CHECK_THROWS_AS(gen::basis_recurrence_residual(p, 1, z), heunterm::DomainError);

  // gamma on a nonpositive integer poisons the basis normalization
  GeneralHeunParams pole = heunterm::general_params(kA, Complex(0.0), kAlpha, kBeta,
                                                    Complex(-1.0), Complex(-1.0));
  CHECK_THROWS_AS(gen::basis_function(pole, 2, z), heunterm::PoleError);
}

TEST_CASE("shifted-basis expansions reproduce the solution") {
  const auto sols = gen::terminate(base_params(2), 2);
  REQUIRE(sols.size() == 3);
  const Complex z(0.24, -0.17);

  for (const auto& t : sols) {
    const Complex phi = gen::solution_value(t, z).value;

    const std::vector<Complex> ca = gen::convert_basis(t, gen::BasisShift::alpha);
    REQUIRE(ca.size() == 3);
    Complex sum_a(0.0);
    for (std::size_t j = 0; j < ca.size(); ++j) {
      PFqSpec s;
      s.upper = {kAlpha + Complex(static_cast<double>(j)), kBeta};
      s.lower = {kGamma};
      sum_a += ca[j] * pfq_eval(s, z).value;
    }
    CHECK(testsup::close(sum_a, phi, 1e-9));

    const std::vector<Complex> cg = gen::convert_basis(t, gen::BasisShift::gamma);
    REQUIRE(cg.size() == 3);
    Complex sum_g(0.0);
    for (std::size_t j = 0; j < cg.size(); ++j) {
      PFqSpec s;
      s.upper = {kAlpha, kBeta};
      s.lower = {kGamma - Complex(static_cast<double>(j))};
      sum_g += cg[j] * pfq_eval(s, z).value;
    }
    CHECK(testsup::close(sum_g, phi, 1e-9));
  }
}

TEST_CASE("basis conversion reports degenerate weights as poles") {
  // (alpha)_2 = 0 for alpha = -1, so the alpha-shifted weights blow up
  gen::Termination bad;
  bad.order = 2;
  bad.params = heunterm::general_params(kA, Complex(0.1), Complex(-1.0), kBeta, kGamma,
                                        Complex(-2.0));
  bad.d = {Complex(1.0), Complex(0.4), Complex(0.2)};
  CHECK_THROWS_AS(gen::convert_basis(bad, gen::BasisShift::alpha), heunterm::PoleError);

  // (gamma - 2)_1 = 0 for gamma = 2 breaks the gamma-shifted weights
  gen::Termination bad2;
  bad2.order = 2;
  bad2.params = heunterm::general_params(kA, Complex(0.1), kAlpha, kBeta, Complex(2.0),
                                         Complex(-2.0));
  bad2.d = {Complex(1.0), Complex(0.4), Complex(0.2)};
  CHECK_THROWS_AS(gen::convert_basis(bad2, gen::BasisShift::gamma), heunterm::PoleError);
}

TEST_CASE("solution derivatives agree with finite differences") {
  const auto sols = gen::terminate(base_params(3), 3);
  REQUIRE(sols.size() == 4);
  const auto& t = sols[2];
  const Complex z(0.29, 0.21);

  const heunterm::SeriesDerivatives d = gen::solution_derivatives(t, z);
  CHECK(testsup::close(d.value, gen::solution_value(t, z).value, 1e-13));
  const testsup::FiniteDifference fd = testsup::central_differences(
      [&](Complex x) { return gen::solution_value(t, x).value; }, z, 1e-5);
  CHECK(testsup::close(d.d1, fd.d1, 1e-8));
  CHECK(testsup::close(d.d2, fd.d2, 1e-5));
}
