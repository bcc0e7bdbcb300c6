#ifndef PADICSPEC_PADIC_NUM_HPP
#define PADICSPEC_PADIC_NUM_HPP

#include <optional>
#include <string>

#include <gmpxx.h>

#include "padicspec/padic_int.hpp"
#include "padicspec/prime.hpp"
#include "padicspec/valuation.hpp"

namespace padicspec {

/// Element of Q_p = Z_p[1/p], stored as p^shift * unit with the unit part a
/// PadicInt of valuation 0, or the distinguished zero (valuation infinity).
///
/// Nonzero values always have exact, determinate valuation equal to `shift`.
/// Construction from a PadicInt that is 0 at its working precision is
/// rejected: its valuation is unknown and Q_p normal form needs it.
class PadicNum {
public:
    static PadicNum zero(Prime p);

    /// Decomposes a = p^n t; rejects a ≡ 0 at precision.
    static PadicNum from_padic_int(const PadicInt& a);

    /// Exact rational num/den; valuation computed on the rational, so any
    /// nonzero rational works (including p-divisible denominators).
    static PadicNum from_rational(const mpz_class& num, const mpz_class& den, const Prime& p,
                                  unsigned precision);

    const Prime& prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return !unit_.has_value(); }

    /// Finite(shift) for nonzero, Infinity for zero.
    Valuation valuation() const;

    /// Exact |x|_p as a rational; 0 for zero.
    mpq_class abs() const;

    long long shift() const;
    const PadicInt& unit_part() const;

    /// Digits known in the unit part; 0 for zero.
    unsigned precision() const noexcept;

    PadicNum operator*(const PadicNum& rhs) const;
    PadicNum operator/(const PadicNum& rhs) const;
    PadicNum operator-() const;

    /// Addition aligns both terms at the smaller valuation. When the leading
    /// digits cancel completely (sum ≡ 0 at the working precision) the
    /// valuation of the result is indeterminate and the op throws
    /// PrecisionError instead of guessing.
    PadicNum operator+(const PadicNum& rhs) const;
    PadicNum operator-(const PadicNum& rhs) const;

    bool operator==(const PadicNum& rhs) const;

    /// "3^-2 * ...21_3 (O(3^2))"; "0" for zero. Shift-0 values print as the unit.
    std::string to_string() const;

private:
    PadicNum(Prime p, long long shift, std::optional<PadicInt> unit)
        : p_(p), shift_(shift), unit_(std::move(unit)) {}

    Prime p_;
    long long shift_;
    std::optional<PadicInt> unit_;
};

} // namespace padicspec

#endif
