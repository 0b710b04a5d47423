#include "heunterm/params.hpp"

#include <cmath>

namespace heunterm {

namespace {

void require_finite(Complex v, const char* name) {
  if (!is_finite(v)) throw DomainError(std::string("parameter ") + name + " is not finite");
}

}  // namespace

void GeneralHeunParams::validate() const {
  require_finite(a, "a");
  require_finite(q, "q");
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(gamma, "gamma");
  require_finite(delta, "delta");
  require_finite(epsilon, "epsilon");
  if (std::abs(a) < 1e-12 || std::abs(a - Complex(1.0)) < 1e-12)
    throw DomainError("singular point a must stay away from 0 and 1");
  const Complex gap = gamma + delta + epsilon - (alpha + beta + Complex(1.0));
  if (std::abs(gap) > 1e-12)
    throw DomainError("exponent-sum constraint gamma+delta+epsilon = alpha+beta+1 violated");
}

GeneralHeunParams general_params(Complex a, Complex q, Complex alpha, Complex beta,
                                 Complex gamma, Complex epsilon) {
  GeneralHeunParams p;
  p.a = a;
  p.q = q;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.epsilon = epsilon;
  p.delta = alpha + beta + Complex(1.0) - gamma - epsilon;
  p.validate();
  return p;
}

void ConfluentHeunParams::validate() const {
  require_finite(q, "q");
  require_finite(alpha, "alpha");
  require_finite(gamma, "gamma");
  require_finite(delta, "delta");
  require_finite(epsilon, "epsilon");
  if (std::abs(epsilon) < 1e-13)
    throw DomainError(
        "epsilon = 0 leaves the confluent class (Ince limit); these expansions require epsilon != 0");
}

ConfluentHeunParams confluent_params(Complex q, Complex alpha, Complex gamma,
                                     Complex delta, Complex epsilon) {
  ConfluentHeunParams p;
  p.q = q;
  p.alpha = alpha;
  p.gamma = gamma;
  p.delta = delta;
  p.epsilon = epsilon;
  p.validate();
  return p;
}

}  // namespace heunterm
