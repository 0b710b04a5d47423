#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "heunterm/frobenius.hpp"
#include "heunterm/heun_confluent.hpp"
#include "heunterm/heun_general.hpp"
#include "heunterm/pfq.hpp"
#include "test_support.hpp"

using heunterm::Complex;
using heunterm::PFqSpec;
using heunterm::oracle::BoundedFrobeniusSeries;
using heunterm::oracle::FrobeniusSeries;

namespace {

// Power-series coefficients of the terminating solution, straight from the
// spec the solver reports. These are what the oracle should reproduce.
template <typename Termination>
std::vector<Complex> solution_coefficients(const Termination& t, int n_max) {
  const auto base_upper =
      std::span<const Complex>(t.solution.upper)
          .first(static_cast<std::size_t>(t.solution.base_upper_count()));
  const auto base_lower =
      std::span<const Complex>(t.solution.lower)
          .first(static_cast<std::size_t>(t.solution.base_lower_count()));
  return ratio_form_coefficients(base_upper, base_lower, t.solution.omega, t.a_poly, n_max);
}

}  // namespace

TEST_CASE("series oracle reduces to plain hypergeometric branches") {
  // epsilon = 0 with q = a*alpha*beta leaves the z = a singularity with a
  // trivial exponent pair, and the analytic branch is 2F1(alpha, beta; gamma)
  const Complex a(2.0, 0.3);
  const Complex alpha(0.6, -0.2), beta(1.1, 0.4), gamma(1.3, 0.1);
  const heunterm::GeneralHeunParams gp =
      heunterm::general_params(a, a * alpha * beta, alpha, beta, gamma, Complex(0.0));

  const FrobeniusSeries f = heunterm::oracle::frobenius_general(gp, 20);
  PFqSpec hyp;
  hyp.upper = {alpha, beta};
  hyp.lower = {gamma};
  const std::vector<Complex> want = pfq_coefficients(hyp, 20);
  REQUIRE(f.coefficients.size() == want.size());
  for (std::size_t n = 0; n < want.size(); ++n)
    CHECK(testsup::close(f.coefficients[n], want[n], 1e-12));

  // same reduction on the confluent side: delta = 0, q = epsilon*alpha
  const Complex ce(0.9, -0.3), ca(0.8, 0.2), cg(1.5, -0.1);
  const heunterm::ConfluentHeunParams cp =
      heunterm::confluent_params(ce * ca, ca, cg, Complex(0.0), ce);
  const FrobeniusSeries g = heunterm::oracle::frobenius_confluent(cp, 20);
  PFqSpec kum;
  kum.upper = {ca};
  kum.lower = {cg};
  kum.omega = -ce;
  const std::vector<Complex> cwant = pfq_coefficients(kum, 20);
  for (std::size_t n = 0; n < cwant.size(); ++n)
    CHECK(testsup::close(g.coefficients[n], cwant[n], 1e-12));

  // the series callable evaluates consistently with its own coefficients
  const Complex z(0.21, -0.12);
  Complex direct(0.0);
  for (std::size_t n = 0; n < f.coefficients.size(); ++n)
    direct += f.coefficients[n] * heunterm::integer_power(z, static_cast<int>(n));
  CHECK(testsup::close(f.value(z), direct, 1e-13));
}

TEST_CASE("oracle series satisfies the differential equation it came from") {
  const heunterm::GeneralHeunParams gp = heunterm::general_params(
      Complex(2.4, 0.5), Complex(0.37, -0.21), Complex(0.6, -0.2), Complex(1.1, 0.4),
      Complex(1.3, 0.1), Complex(0.45, 0.2));
  const FrobeniusSeries f = heunterm::oracle::frobenius_general(gp, 60);
  const Complex z(0.18, 0.09);
  const Complex res = heunterm::oracle::ode_residual_general(
      gp, z, f.value(z), f.derivative(z), f.second_derivative(z));
  CHECK(heunterm::oracle::relative_residual(res, f.value(z), f.derivative(z),
                                            f.second_derivative(z)) < 1e-11);

  const heunterm::ConfluentHeunParams cp = heunterm::confluent_params(
      Complex(0.42, 0.11), Complex(0.8, 0.2), Complex(1.5, -0.1), Complex(-0.7, 0.3),
      Complex(1.1, -0.4));
  const FrobeniusSeries g = heunterm::oracle::frobenius_confluent(cp, 60);
  const Complex w(0.3, -0.2);
  const Complex cres = heunterm::oracle::ode_residual_confluent(
      cp, w, g.value(w), g.derivative(w), g.second_derivative(w));
  CHECK(heunterm::oracle::relative_residual(cres, g.value(w), g.derivative(w),
                                            g.second_derivative(w)) < 1e-11);
}

TEST_CASE("residual evaluation refuses points too close to a singularity") {
  const heunterm::GeneralHeunParams gp = heunterm::general_params(
      Complex(1.7, 0.0), Complex(0.3), Complex(0.6), Complex(1.1), Complex(1.3), Complex(0.4));
  const Complex one(1.0);
  CHECK_THROWS_AS(heunterm::oracle::ode_residual_general(gp, Complex(1e-9), one, one, one),
                  heunterm::DomainError);
  CHECK_THROWS_AS(
      heunterm::oracle::ode_residual_general(gp, Complex(1.0 + 1e-9), one, one, one),
      heunterm::DomainError);
  CHECK_THROWS_AS(
      heunterm::oracle::ode_residual_general(gp, gp.a + Complex(1e-9), one, one, one),
      heunterm::DomainError);
  CHECK_NOTHROW(heunterm::oracle::ode_residual_general(gp, Complex(0.4), one, one, one));

  const heunterm::ConfluentHeunParams cp = heunterm::confluent_params(
      Complex(0.3), Complex(0.8), Complex(1.5), Complex(-0.7), Complex(1.1));
  CHECK_THROWS_AS(heunterm::oracle::ode_residual_confluent(cp, Complex(0.0), one, one, one),
                  heunterm::DomainError);
  CHECK_THROWS_AS(
      heunterm::oracle::ode_residual_confluent(cp, Complex(1.0, 1e-10), one, one, one),
      heunterm::DomainError);
  // the confluent equation has no singularity at z = a; far-out points are fine
  CHECK_NOTHROW(heunterm::oracle::ode_residual_confluent(cp, Complex(5.0), one, one, one));
}

TEST_CASE("relative residual normalizes by the largest register") {
  namespace orc = heunterm::oracle;
  CHECK(orc::relative_residual(Complex(1.0), Complex(1e6), Complex(0.0), Complex(0.0)) ==
        doctest::Approx(1e-6));
  CHECK(orc::relative_residual(Complex(2.0), Complex(0.0), Complex(0.0), Complex(0.0)) ==
        doctest::Approx(2.0));
  CHECK(orc::relative_residual(Complex(0.0), Complex(5.0), Complex(1.0), Complex(0.5)) == 0.0);
  CHECK(orc::relative_residual(Complex(3.0), Complex(0.1), Complex(0.2), Complex(6.0)) ==
        doctest::Approx(0.5));
}

TEST_CASE("error bounds certify stable runs and flag amplified ones") {
  // |a| > 1: the terminating branch dominates the recurrence, everything holds
  heunterm::GeneralHeunParams stable = heunterm::general_params(
      Complex(2.0, 0.3), Complex(0.0), Complex(0.6, -0.2), Complex(1.1, 0.4),
      Complex(1.3, 0.1), Complex(-2.0));
  const auto stable_sols = heunterm::general::terminate(stable, 2);
  REQUIRE(stable_sols.size() == 3);
  {
    stable.q = stable_sols[0].chosen_q;
    const BoundedFrobeniusSeries b = heunterm::oracle::frobenius_general_bounded(stable, 20);
    CHECK(b.error_bound[0] == 0.0);
    // the majorant compounds |keep/up| + |back/up| per row, so even a stable
    // run sheds certificate strength slowly; early rows stay at full precision
    for (int n = 0; n <= 8; ++n) CHECK(b.trusted(n, 1e-12));
    for (int n = 9; n <= 20; ++n) CHECK(b.trusted(n, 1e-8));
    // and the certified coefficients match the closed-form solution
    const std::vector<Complex> got = solution_coefficients(stable_sols[0], 20);
    for (std::size_t n = 0; n < got.size(); ++n)
      CHECK(testsup::close(b.series.coefficients[n], got[n], 1e-11));
  }

  // |a| < 1: forward recursion amplifies rounding by roughly (1/|a|)^n, so
  // distant rows must lose their certificates while early rows keep them
  heunterm::GeneralHeunParams shaky = heunterm::general_params(
      Complex(0.35, 0.0), Complex(0.0), Complex(0.6, -0.2), Complex(1.1, 0.4),
      Complex(1.3, 0.1), Complex(-2.0));
  const auto shaky_sols = heunterm::general::terminate(shaky, 2);
  REQUIRE(shaky_sols.size() == 3);
  shaky.q = shaky_sols[1].chosen_q;
  const BoundedFrobeniusSeries b = heunterm::oracle::frobenius_general_bounded(shaky, 40);
  CHECK(b.error_bound[0] == 0.0);
  CHECK(b.trusted(0, 1e-13));
  CHECK(b.trusted(1, 1e-13));
  int untrusted = 0;
  for (int n = 0; n <= 40; ++n)
    if (!b.trusted(n, 1e-13)) ++untrusted;
  CHECK(untrusted > 5);
  // bounds are monotone under the recursion's triangle inequality
  for (int n = 25; n < 40; ++n) CHECK(b.error_bound[n + 1] >= b.error_bound[n] * 0.99);

  // trusted rows still agree with the solution's coefficients
  const std::vector<Complex> want = solution_coefficients(shaky_sols[1], 40);
  for (int n = 0; n <= 40; ++n) {
    if (!b.trusted(n, 1e-12)) continue;
    CHECK(testsup::close(b.series.coefficients[static_cast<std::size_t>(n)],
                         want[static_cast<std::size_t>(n)], 1e-10));
  }
}

TEST_CASE("row residual separates true branches from corrupted ones") {
  heunterm::ConfluentHeunParams cp = heunterm::confluent_params(
      Complex(0.0), Complex(0.8, 0.2), Complex(1.5, -0.1), Complex(-2.0), Complex(1.1, -0.4));
  const auto sols = heunterm::confluent::terminate(cp, 2);
  REQUIRE(sols.size() == 3);
  const auto& t = sols[0];
  cp.q = t.chosen_q;

  const std::vector<Complex> c = solution_coefficients(t, 25);
  const double good = heunterm::oracle::recurrence_row_residual(cp, c);
  CHECK(good < 1e-12);

  // wrong accessory parameter
  heunterm::ConfluentHeunParams off = cp;
  off.q += Complex(1e-3);
  CHECK(heunterm::oracle::recurrence_row_residual(off, c) > 1e-6);

  // geometric rescale, the signature of a wrong series argument scale
  std::vector<Complex> scaled = c;
  double pow = 1.0;
  for (auto& cn : scaled) {
    cn *= pow;
    pow *= 1.1;
  }
  CHECK(heunterm::oracle::recurrence_row_residual(cp, scaled) > 1e-4);

  // index shift
  std::vector<Complex> shifted(c.begin() + 1, c.end());
  CHECK(heunterm::oracle::recurrence_row_residual(cp, shifted) > 1e-3);

  // broken seed normalization shows up through the c_0 row
  std::vector<Complex> reseeded = c;
  reseeded[0] = Complex(2.0);
  CHECK(heunterm::oracle::recurrence_row_residual(cp, reseeded) > 1e-3);

  CHECK_THROWS_AS(heunterm::oracle::recurrence_row_residual(cp, std::vector<Complex>{}),
                  heunterm::DomainError);

  // general-equation flavor of the same gate
  heunterm::GeneralHeunParams gp = heunterm::general_params(
      Complex(1.8, 0.4), Complex(0.0), Complex(0.7, 0.1), Complex(-0.4, 0.3),
      Complex(1.2, -0.2), Complex(-1.0));
  const auto gsols = heunterm::general::terminate(gp, 1);
  REQUIRE(gsols.size() == 2);
  gp.q = gsols[0].chosen_q;
  const std::vector<Complex> gc = solution_coefficients(gsols[0], 25);
  CHECK(heunterm::oracle::recurrence_row_residual(gp, gc) < 1e-12);
  gp.q += Complex(1e-3);
  CHECK(heunterm::oracle::recurrence_row_residual(gp, gc) > 1e-7);
}
