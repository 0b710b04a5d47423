#include "heunterm/pfq.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>

namespace heunterm {

namespace {

constexpr double kPoleTol = 1e-12;

[[noreturn]] void throw_pole(const char* side, int index, Complex value, int term) {
  std::ostringstream msg;
  msg << side << " parameter " << index << " (= " << value.real();
  if (value.imag() != 0.0) msg << (value.imag() < 0 ? "" : "+") << value.imag() << "i";
  msg << ") makes term " << term << " divide by zero";
  std::ostringstream label;
  label << side << "[" << index << "]";
  throw PoleError(msg.str(), label.str(), term);
}

// Walks the term ratio c_{n+1}/c_n = omega * prod(u+n) / ((n+1) prod(l+n)),
// optionally rescaling each coefficient by A(n)/A(0). A zero coefficient
// short-circuits the ratio, so series that terminate before a lower-parameter
// pole (or an A-root) still evaluate; live divisions by ~0 raise PoleError.
class CoefficientStream {
 public:
  CoefficientStream(std::span<const Complex> upper, std::span<const Complex> lower,
                    Complex omega, const Polynomial* a_poly)
      : upper_(upper), lower_(lower), omega_(omega), a_poly_(a_poly) {
    if (a_poly_ != nullptr) {
      a0_ = (*a_poly_)(Complex(0.0));
      if (std::abs(a0_) < kPoleTol)
        throw DomainError("ratio form needs A(0) != 0 to normalize the series");
    }
  }

  // Must be called with n = 0, 1, 2, ... in order.
  Complex operator()(int n) {
    if (n == 0) {
      base_ = Complex(1.0);
    } else if (base_ != Complex(0.0)) {
      const double m = static_cast<double>(n - 1);
      Complex num = omega_;
      for (const Complex& u : upper_) num *= u + m;
      Complex den(static_cast<double>(n));
      for (std::size_t k = 0; k < lower_.size(); ++k) {
        const Complex f = lower_[k] + m;
        if (std::abs(f) < kPoleTol && num != Complex(0.0))
          throw_pole("lower", static_cast<int>(k), lower_[k], n);
        den *= f;
      }
      base_ = (num == Complex(0.0)) ? Complex(0.0) : base_ * num / den;
    }
    if (a_poly_ == nullptr || base_ == Complex(0.0)) return base_;
    return base_ * (*a_poly_)(Complex(static_cast<double>(n))) / a0_;
  }

 private:
  std::span<const Complex> upper_;
  std::span<const Complex> lower_;
  Complex omega_;
  const Polynomial* a_poly_;
  Complex base_{1.0};
  Complex a0_{1.0};
};

struct RawSums {
  Complex f{};
  Complex d1{};
  Complex d2{};
  double abs_f = 0.0;  // running sums of |term| per register, for the
  double abs_d1 = 0.0;  // cancellation diagnostic
  double abs_d2 = 0.0;
  int terms = 0;
  double tail = 0.0;
  bool exact_termination = false;
  bool converged = false;
};

double smallness(Complex term, Complex sum, const SeriesWindow& w) {
  const double denom = w.abs_tol + w.rel_tol * std::abs(sum);
  const double t = std::abs(term);
  if (denom <= 0.0) return t == 0.0 ? 0.0 : 2.0;
  return t / denom;
}

RawSums sum_power_series(CoefficientStream& coeff, Complex z, const SeriesWindow& w,
                         int order) {
  RawSums s;
  int small_run = 0;
  int zero_run = 0;
  Complex p0(1.0), pm1(0.0), pm2(0.0);  // z^n, z^{n-1}, z^{n-2}
  for (int n = 0; n < w.max_terms; ++n) {
    const Complex c = coeff(n);
    const Complex t0 = c * p0;
    s.f += t0;
    s.abs_f += std::abs(t0);
    double worst = smallness(t0, s.f, w);
    if (order >= 1) {
      const Complex t1 = static_cast<double>(n) * c * pm1;
      s.d1 += t1;
      s.abs_d1 += std::abs(t1);
      worst = std::max(worst, smallness(t1, s.d1, w));
    }
    if (order >= 2) {
      const Complex t2 = static_cast<double>(n) * static_cast<double>(n - 1) * c * pm2;
      s.d2 += t2;
      s.abs_d2 += std::abs(t2);
      worst = std::max(worst, smallness(t2, s.d2, w));
    }
    s.terms = n + 1;
    s.tail = std::abs(t0);
    if (!is_finite(s.f)) break;
    zero_run = (c == Complex(0.0)) ? zero_run + 1 : 0;
    if (zero_run >= 2) {
      s.exact_termination = true;
      s.converged = true;
      break;
    }
    small_run = (worst <= 1.0) ? small_run + 1 : 0;
    if (small_run >= 2) {
      s.converged = true;
      break;
    }
    pm2 = pm1;
    pm1 = p0;
    p0 *= z;
  }
  return s;
}

SeriesDerivatives run_series(std::span<const Complex> upper, std::span<const Complex> lower,
                             Complex omega, const Polynomial* a_poly, Complex z,
                             const SeriesWindow& w, int order) {
  if (upper.size() > lower.size() + 1)
    throw DomainError("series with more than q+1 upper parameters has zero convergence radius");
  CoefficientStream stream(upper, lower, omega, a_poly);
  const RawSums s = sum_power_series(stream, z, w, order);
  const bool unit_disk_type = upper.size() == lower.size() + 1;
  const bool outside = unit_disk_type && std::abs(omega * z) >= 1.0 && !s.exact_termination;
  if (!s.converged && !outside)
    throw ConvergenceError("series did not meet tolerance within max_terms");
  SeriesDerivatives out;
  out.value = s.f;
  out.d1 = s.d1;
  out.d2 = s.d2;
  out.terms_used = s.terms;
  out.outside_disk = outside;
  out.error_estimate = s.tail;
  double scale = std::max(1.0, std::abs(s.f));
  if (order >= 1) scale = std::max(scale, std::abs(s.d1));
  if (order >= 2) scale = std::max(scale, std::abs(s.d2));
  out.cancellation = std::max({s.abs_f, s.abs_d1, s.abs_d2}) / scale;
  return out;
}

Polynomial pair_polynomial(const PFqSpec& spec) {
  // A(x) = prod over augmented pairs of (x + e_i), read off the lower entries.
  Polynomial a = Polynomial::constant(Complex(1.0));
  for (int k = spec.base_lower_count(); k < static_cast<int>(spec.lower.size()); ++k)
    a = a * Polynomial::linear(spec.lower[static_cast<std::size_t>(k)], Complex(1.0));
  return a;
}

SeriesDerivatives eval_dispatch(const PFqSpec& spec, Complex z, const SeriesWindow& w,
                                int order) {
  spec.validate();
  w.validate();
  bool route = false;
  for (int k = spec.base_lower_count(); k < static_cast<int>(spec.lower.size()); ++k) {
    if (nonpositive_integer_near(spec.lower[static_cast<std::size_t>(k)], kPoleTol) >= 0) {
      route = true;
      break;
    }
  }
  std::span<const Complex> upper(spec.upper);
  std::span<const Complex> lower(spec.lower);
  if (!route) return run_series(upper, lower, spec.omega, nullptr, z, w, order);
  const Polynomial a = pair_polynomial(spec);
  return run_series(upper.first(static_cast<std::size_t>(spec.base_upper_count())),
                    lower.first(static_cast<std::size_t>(spec.base_lower_count())),
                    spec.omega, &a, z, w, order);
}

SeriesValue as_value(const SeriesDerivatives& d, int order) {
  SeriesValue v;
  v.value = order == 0 ? d.value : (order == 1 ? d.d1 : d.d2);
  v.terms_used = d.terms_used;
  v.outside_disk = d.outside_disk;
  v.error_estimate = d.error_estimate;
  v.cancellation = d.cancellation;
  return v;
}

}  // namespace

void PFqSpec::validate() const {
  if (augmented_pairs < 0) throw DomainError("pfq spec has negative augmented pair count");
  if (base_upper_count() < 0 || base_lower_count() < 0)
    throw DomainError("pfq spec has more augmented pairs than parameters");
  for (const Complex& u : upper)
    if (!is_finite(u)) throw DomainError("pfq spec has non-finite upper parameter");
  for (const Complex& l : lower)
    if (!is_finite(l)) throw DomainError("pfq spec has non-finite lower parameter");
  if (!is_finite(omega)) throw DomainError("pfq spec has non-finite omega");
}

PFqSpec augment_parameters(PFqSpec spec, std::span<const Complex> e) {
  spec.validate();
  for (const Complex& ei : e) {
    if (!is_finite(ei)) throw DomainError("augment_parameters got a non-finite value");
    spec.upper.push_back(ei + Complex(1.0));
    spec.lower.push_back(ei);
    ++spec.augmented_pairs;
  }
  return spec;
}

std::vector<Complex> pfq_coefficients(const PFqSpec& spec, int n_max) {
  spec.validate();
  if (n_max < 0) throw DomainError("pfq_coefficients needs n_max >= 0");
  CoefficientStream stream(spec.upper, spec.lower, spec.omega, nullptr);
  std::vector<Complex> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = stream(n);
  return out;
}

SeriesValue pfq_eval(const PFqSpec& spec, Complex z, const SeriesWindow& window) {
  return as_value(eval_dispatch(spec, z, window, 0), 0);
}

SeriesValue pfq_derivative_series(const PFqSpec& spec, Complex z, int order,
                                  const SeriesWindow& window) {
  if (order != 1 && order != 2)
    throw DomainError("pfq_derivative_series supports order 1 or 2");
  return as_value(eval_dispatch(spec, z, window, order), order);
}

SeriesDerivatives pfq_eval_derivatives(const PFqSpec& spec, Complex z,
                                       const SeriesWindow& window) {
  return eval_dispatch(spec, z, window, 2);
}

SeriesValue evaluate_ratio_form(std::span<const Complex> base_upper,
                                std::span<const Complex> base_lower, Complex omega,
                                const Polynomial& a_poly, Complex z,
                                const SeriesWindow& window) {
  window.validate();
  const SeriesDerivatives d = run_series(base_upper, base_lower, omega, &a_poly, z, window, 0);
  return as_value(d, 0);
}

SeriesDerivatives ratio_form_derivatives(std::span<const Complex> base_upper,
                                         std::span<const Complex> base_lower, Complex omega,
                                         const Polynomial& a_poly, Complex z,
                                         const SeriesWindow& window) {
  window.validate();
  return run_series(base_upper, base_lower, omega, &a_poly, z, window, 2);
}

std::vector<Complex> ratio_form_coefficients(std::span<const Complex> base_upper,
                                             std::span<const Complex> base_lower, Complex omega,
                                             const Polynomial& a_poly, int n_max) {
  if (n_max < 0) throw DomainError("ratio_form_coefficients needs n_max >= 0");
  CoefficientStream stream(base_upper, base_lower, omega, &a_poly);
  std::vector<Complex> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = stream(n);
  return out;
}

}  // namespace heunterm
