#ifndef PADICSPEC_INT_POLY_TOOLS_HPP
#define PADICSPEC_INT_POLY_TOOLS_HPP

#include <vector>

#include <gmpxx.h>

#include "padicspec/poly.hpp"
#include "padicspec/prime.hpp"

namespace padicspec {

/// Sylvester resultant, exact over Z. res(f, g) = 0 when either argument is
/// zero and both have positive degree slots; res of two constants is 1.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^{m(m-1)/2} res(f, f') / lc(f) for deg f = m >= 1.
/// Rejects constants and the zero polynomial.
mpz_class discriminant(const IntPoly& f);

/// All rational roots of a nonzero f, sorted ascending, no repeats.
/// Complete by the rational root theorem; throws SizeError when the divisor
/// enumeration of the outer coefficients would exceed internal bounds.
std::vector<mpq_class> rational_roots(const IntPoly& f);

/// Primes q (u64 range) dividing every coefficient below the leading one:
/// exactly the candidates for an Eisenstein certificate of f. Prime factors
/// beyond 64 bits are silently dropped.
std::vector<Prime> eisenstein_candidate_primes(const IntPoly& f);

} // namespace padicspec

#endif
