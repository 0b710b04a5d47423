#include "heunterm/tridiagonal.hpp"

#include <cmath>
#include <cstddef>

namespace heunterm {

void TridiagonalBand::validate() const {
  if (diag.empty()) throw DomainError("tridiagonal band needs at least one diagonal entry");
  if (sub.size() + 1 != diag.size() || super.size() + 1 != diag.size())
    throw DomainError("tridiagonal band has mismatched sub/diag/super lengths");
  for (const Polynomial& p : diag)
    if (p.degree() != 1)
      throw DomainError("tridiagonal band diagonal entries must be degree 1 in q");
}

Polynomial continuant_char_poly(const TridiagonalBand& band) {
  band.validate();
  const int n = band.size();
  Polynomial dm2 = Polynomial::constant(Complex(1.0));  // D_{-1}
  Polynomial dm1 = band.diag[0];                        // D_0
  for (int k = 1; k < n; ++k) {
    Polynomial dk = band.diag[static_cast<std::size_t>(k)] * dm1 -
                    Polynomial::constant(band.sub[static_cast<std::size_t>(k - 1)] *
                                         band.super[static_cast<std::size_t>(k - 1)]) *
                        dm2;
    dm2 = std::move(dm1);
    dm1 = std::move(dk);
  }
  if (dm1.degree() != n)
    throw DomainError("continuant lost degree; diagonal q-coefficients degenerate");
  const Complex lead = dm1.leading();
  const double expected = (n % 2 == 0) ? 1.0 : -1.0;
  if (std::abs(lead - Complex(expected)) > 1e-9 * std::max(1.0, std::abs(lead)))
    throw DomainError("continuant leading coefficient is not (-1)^(N+1); band is malformed");
  return dm1;
}

}  // namespace heunterm
