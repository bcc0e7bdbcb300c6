#ifndef PADICSPEC_VALUATION_HPP
#define PADICSPEC_VALUATION_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "padicspec/prime.hpp"

namespace padicspec {

/// Value of a discrete valuation: an integer or +infinity.
/// Infinity absorbs under addition and dominates every finite value.
class Valuation {
public:
    static Valuation finite(long long n) noexcept { return Valuation(n, false); }
    static Valuation infinity() noexcept { return Valuation(0, true); }

    bool is_infinite() const noexcept { return infinite_; }

    /// The finite value; throws on infinity.
    long long finite_value() const;

    Valuation operator+(const Valuation& o) const noexcept {
        if (infinite_ || o.infinite_) return infinity();
        return finite(n_ + o.n_);
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;

    // Ordering with +infinity as the top element.
    friend bool operator<(const Valuation& a, const Valuation& b) noexcept {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.n_ < b.n_;
    }
    friend bool operator>(const Valuation& a, const Valuation& b) noexcept { return b < a; }
    friend bool operator<=(const Valuation& a, const Valuation& b) noexcept { return !(b < a); }
    friend bool operator>=(const Valuation& a, const Valuation& b) noexcept { return !(a < b); }

    std::string to_string() const { return infinite_ ? "infinity" : std::to_string(n_); }

private:
    Valuation(long long n, bool inf) noexcept : n_(n), infinite_(inf) {}

    long long n_;
    bool infinite_;
};

/// v_p of an integer: the exponent of p in x, with v_p(0) = infinity.
Valuation vp_int(const mpz_class& x, const Prime& p);

/// v_p of a rational num/den, den != 0: v_p(num) - v_p(den).
Valuation vp_rat(const mpz_class& num, const mpz_class& den, const Prime& p);

/// |.|_p as an exact rational: p^{-n} for finite n, 0 for infinity.
mpq_class abs_p(const Valuation& v, const Prime& p);

} // namespace padicspec

#endif
