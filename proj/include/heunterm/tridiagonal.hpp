#ifndef HEUNTERM_TRIDIAGONAL_HPP_
#define HEUNTERM_TRIDIAGONAL_HPP_

#include <vector>

#include "heunterm/core.hpp"
#include "heunterm/polynomial.hpp"

namespace heunterm {

/// The leading (N+1)x(N+1) minor of a three-term recurrence written as a
/// tridiagonal band. Row m holds sub[m-1] (coupling down), diag[m] as a
/// degree-1 polynomial in the spectral parameter q, and super[m] (coupling
/// up). diag entries are Qtilde_m - q, so sizes are diag: N+1, sub: N,
/// super: N, with super[m] = R_{m+1} and sub[m] = P_m.
struct TridiagonalBand {
  std::vector<Complex> sub;
  std::vector<Polynomial> diag;
  std::vector<Complex> super;

  int size() const { return static_cast<int>(diag.size()); }
  void validate() const;
};

/// Determinant of the band in q by the continuant recurrence
///   D_k = diag_k * D_{k-1} - sub_{k-1} * super_{k-1} * D_{k-2}.
/// Degree N+1 with leading coefficient (-1)^{N+1}; a diagnostic failure here
/// means the band entries were not degree-1 in q.
Polynomial continuant_char_poly(const TridiagonalBand& band);

}  // namespace heunterm

#endif  // HEUNTERM_TRIDIAGONAL_HPP_
