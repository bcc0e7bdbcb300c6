#ifndef PADICSPEC_PADIC_INT_HPP
#define PADICSPEC_PADIC_INT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "padicspec/prime.hpp"
#include "padicspec/valuation.hpp"

namespace padicspec {

/// Element of Z_p known to N p-adic digits: the class of `residue` mod p^N.
///
/// residue == 0 means "congruent to 0 mod p^N"; the true valuation is then
/// >= N but unknown, and operations that need it (valuation, unit_decompose,
/// invert_unit) refuse rather than guess.
///
/// Immutable value type; all operations return new values.
class PadicInt {
public:
    PadicInt(Prime p, unsigned precision, mpz_class residue);

    const Prime& prime() const noexcept { return p_; }
    unsigned precision() const noexcept { return precision_; }
    const mpz_class& residue() const noexcept { return residue_; }

    /// p^precision, the working modulus.
    const mpz_class& modulus() const noexcept { return modulus_; }

    bool is_zero() const noexcept { return residue_ == 0; }
    bool is_unit() const noexcept;

    /// v_p of the residue. Indeterminate (and rejected) when residue == 0.
    Valuation valuation() const;

    /// residue mod p^n for 1 <= n <= precision. The projection pi_n; digits
    /// beyond the working precision cannot be manufactured.
    mpz_class truncate(unsigned n) const;

    /// [x mod p, x mod p^2, ..., x mod p^N]; adjacent entries are coherent.
    std::vector<mpz_class> truncation_sequence() const;

    /// Same value viewed at lower precision n.
    PadicInt with_precision(unsigned n) const;

    /// Writes a = p^n * t with t a unit. t has precision N - n.
    /// Rejects residue 0 (valuation indeterminate) and n = N (no digits left).
    std::pair<unsigned, PadicInt> unit_decompose() const;

    /// Inverse mod p^N. Rejects non-units.
    PadicInt invert_unit() const;

    PadicInt operator+(const PadicInt& rhs) const;
    PadicInt operator-(const PadicInt& rhs) const;
    PadicInt operator*(const PadicInt& rhs) const;
    PadicInt operator-() const;

    /// Exact equality of the representation: same p, same precision, same residue.
    bool operator==(const PadicInt& rhs) const noexcept;

    /// Congruence at the smaller of the two precisions.
    bool congruent(const PadicInt& rhs) const;

    /// Base-p digits, least significant first, always exactly `precision` entries.
    std::vector<unsigned> digits() const;

    /// "...2011_3 (O(3^4))": digits least significant first after the ellipsis.
    std::string to_string() const;

private:
    Prime p_;
    unsigned precision_;
    mpz_class modulus_;
    mpz_class residue_;

    void require_same_prime(const PadicInt& rhs) const;
};

/// i(x) = (x, x, ...) truncated to N digits; negative x wraps mod p^N.
PadicInt embed_int(const mpz_class& x, const Prime& p, unsigned precision);

/// num/den with p-free denominator, den inverted mod p^N.
PadicInt embed_rational(const mpz_class& num, const mpz_class& den, const Prime& p,
                        unsigned precision);

mpz_class pow_ui(const mpz_class& base, unsigned long exp);

} // namespace padicspec

#endif
