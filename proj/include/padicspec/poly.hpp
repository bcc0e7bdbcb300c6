#ifndef PADICSPEC_POLY_HPP
#define PADICSPEC_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "padicspec/padic_int.hpp"
#include "padicspec/prime.hpp"

namespace padicspec {

/// Dense univariate polynomial over Z in the variable T.
/// Coefficients are stored lowest degree first; canonical form has no
/// trailing zeros, so the zero polynomial is the empty list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    /// Coefficient of T^i; 0 beyond the degree.
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading() const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    IntPoly derivative() const;

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& rhs) const = default;

    /// Descending powers, normalized signs: "T^3-2*T+5", "T^2+2*T+2", "0".
    std::string to_string() const;

private:
    std::vector<mpz_class> c_;
};

/// Polynomial over F_p: coefficients reduced to [0, p), canonical form as IntPoly.
class FpPoly {
public:
    explicit FpPoly(Prime p) : p_(p) {}
    FpPoly(Prime p, std::vector<mpz_class> coeffs);

    const Prime& prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading() const;
    bool is_monic() const;

    mpz_class eval(const mpz_class& x) const;
    FpPoly derivative() const;
    FpPoly monic() const;

    FpPoly operator+(const FpPoly& rhs) const;
    FpPoly operator-(const FpPoly& rhs) const;
    FpPoly operator*(const FpPoly& rhs) const;
    /// (quotient, remainder); divisor must be nonzero.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
    bool divisible_by(const FpPoly& divisor) const;
    bool operator==(const FpPoly& rhs) const;

    /// (degree, lexicographic on coefficient list, constant term first).
    static bool order_less(const FpPoly& a, const FpPoly& b);

    std::string to_string() const;

private:
    Prime p_;
    std::vector<mpz_class> c_;

    void trim();
    void require_same_prime(const FpPoly& rhs) const;
};

/// Polynomial with PadicInt coefficients at a common (p, precision).
/// The stored length is the formal degree + 1; leading coefficients with
/// residue 0 are kept, since at finite precision they are "unknown", not zero.
class ZpPoly {
public:
    ZpPoly(Prime p, unsigned precision, std::vector<PadicInt> coeffs);

    const Prime& prime() const noexcept { return p_; }
    unsigned precision() const noexcept { return precision_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Formal degree: index of the last stored coefficient (-1 if none).
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<PadicInt>& coeffs() const noexcept { return c_; }
    const PadicInt& coeff(std::size_t i) const;
    const PadicInt& leading() const;

    PadicInt eval(const PadicInt& a) const;
    ZpPoly derivative() const;

    std::string to_string() const;

private:
    Prime p_;
    unsigned precision_;
    std::vector<PadicInt> c_;
};

FpPoly reduce_mod_p(const IntPoly& f, const Prime& p);
ZpPoly to_zp(const IntPoly& f, const Prime& p, unsigned precision);
FpPoly reduce_mod_p(const ZpPoly& f);

/// True iff some coefficient of f is a unit of Z_p. The zero polynomial is
/// not primitive.
bool is_primitive(const ZpPoly& f);
bool is_primitive_at(const IntPoly& f, const Prime& p);

/// Prop-2.2 test: v(a_n) = 0, v(a_i) >= 1 for i < n, v(a_0) = 1.
/// True implies f irreducible over Q_p; false is inconclusive.
/// Throws PrecisionError when the decision genuinely depends on digits beyond
/// the working precision (constant term = 0 at precision 1).
bool eisenstein(const ZpPoly& f);

/// Exact-coefficient variant; always determinate.
bool eisenstein(const IntPoly& f, const Prime& p);

} // namespace padicspec

#endif
