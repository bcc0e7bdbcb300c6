#ifndef PADICSPEC_FP_FACTOR_HPP
#define PADICSPEC_FP_FACTOR_HPP

#include <utility>
#include <vector>

#include "padicspec/poly.hpp"

namespace padicspec {

/// f = unit * prod factors[i].first ^ factors[i].second with monic irreducible
/// factors, sorted by (degree, then coefficient list, constant term first).
struct FpFactorization {
    mpz_class unit;
    std::vector<std::pair<FpPoly, unsigned>> factors;
};

/// Monic gcd; gcd(f, 0) is the monic multiple of f, gcd(0, 0) = 0.
FpPoly fp_gcd(FpPoly a, FpPoly b);

/// Frobenius criterion: deg d >= 1, T^{p^d} = T mod f, and for every prime
/// q | d, gcd(T^{p^{d/q}} - T, f) = 1. Constants are not irreducible.
bool fp_is_irreducible(const FpPoly& f);

/// Complete factorization over F_p. Rejects the zero polynomial.
FpFactorization fp_factor(const FpPoly& f);

/// All monic irreducibles of the given degree, in the factor ordering above.
/// Throws SizeError when the candidate count p^degree exceeds cap.
std::vector<FpPoly> enumerate_irreducibles(const Prime& p, unsigned degree,
                                           unsigned long cap = 1000000);

} // namespace padicspec

#endif
