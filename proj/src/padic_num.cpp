#include "padicspec/padic_num.hpp"

#include <sstream>
#include <stdexcept>

#include "padicspec/errors.hpp"

namespace padicspec {

PadicNum PadicNum::zero(Prime p) { return PadicNum(p, 0, std::nullopt); }

PadicNum PadicNum::from_padic_int(const PadicInt& a) {
    if (a.is_zero()) {
        throw PrecisionError("PadicNum: input is 0 at precision " +
                             std::to_string(a.precision()) + ", valuation indeterminate");
    }
    auto [n, t] = a.unit_decompose();
    return PadicNum(a.prime(), static_cast<long long>(n), t);
}

PadicNum PadicNum::from_rational(const mpz_class& num, const mpz_class& den, const Prime& p,
                                 unsigned precision) {
    if (den == 0) {
        throw std::invalid_argument("PadicNum: zero denominator");
    }
    if (num == 0) {
        return zero(p);
    }
    mpz_class pz(p.value());
    mpz_class nu, du;
    unsigned long a = mpz_remove(nu.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    unsigned long b = mpz_remove(du.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    PadicInt unit = embed_rational(nu, du, p, precision);
    return PadicNum(p, static_cast<long long>(a) - static_cast<long long>(b), unit);
}

Valuation PadicNum::valuation() const {
    return is_zero() ? Valuation::infinity() : Valuation::finite(shift_);
}

mpq_class PadicNum::abs() const { return abs_p(valuation(), p_); }

long long PadicNum::shift() const {
    if (is_zero()) {
        throw std::domain_error("PadicNum: zero has no shift");
    }
    return shift_;
}

const PadicInt& PadicNum::unit_part() const {
    if (is_zero()) {
        throw std::domain_error("PadicNum: zero has no unit part");
    }
    return *unit_;
}

unsigned PadicNum::precision() const noexcept { return is_zero() ? 0 : unit_->precision(); }

PadicNum PadicNum::operator*(const PadicNum& rhs) const {
    if (p_ != rhs.p_) {
        throw std::invalid_argument("prime mismatch in PadicNum arithmetic");
    }
    if (is_zero() || rhs.is_zero()) {
        return zero(p_);
    }
    return PadicNum(p_, shift_ + rhs.shift_, *unit_ * *rhs.unit_);
}

PadicNum PadicNum::operator/(const PadicNum& rhs) const {
    if (p_ != rhs.p_) {
        throw std::invalid_argument("prime mismatch in PadicNum arithmetic");
    }
    if (rhs.is_zero()) {
        throw std::domain_error("PadicNum: division by zero");
    }
    if (is_zero()) {
        return zero(p_);
    }
    return PadicNum(p_, shift_ - rhs.shift_, *unit_ * rhs.unit_->invert_unit());
}

PadicNum PadicNum::operator-() const {
    if (is_zero()) {
        return *this;
    }
    return PadicNum(p_, shift_, -*unit_);
}

PadicNum PadicNum::operator+(const PadicNum& rhs) const {
    if (p_ != rhs.p_) {
        throw std::invalid_argument("prime mismatch in PadicNum arithmetic");
    }
    if (is_zero()) {
        return rhs;
    }
    if (rhs.is_zero()) {
        return *this;
    }
    // Align both terms at v = min(shift): x = p^v (ua * p^(sa-v) + ub * p^(sb-v)).
    long long v = std::min(shift_, rhs.shift_);
    unsigned long da = static_cast<unsigned long>(shift_ - v);
    unsigned long db = static_cast<unsigned long>(rhs.shift_ - v);
    unsigned prec = std::min(unit_->precision(), rhs.unit_->precision());
    const Prime& p = p_;
    mpz_class pa = pow_ui(mpz_class(p.value()), da);
    mpz_class pb = pow_ui(mpz_class(p.value()), db);
    PadicInt sum(p, prec, unit_->residue() * pa + rhs.unit_->residue() * pb);
    if (sum.is_zero()) {
        throw PrecisionError("PadicNum addition: complete cancellation at precision " +
                             std::to_string(prec) + ", valuation indeterminate");
    }
    auto [n, t] = sum.unit_decompose();
    return PadicNum(p, v + static_cast<long long>(n), t);
}

PadicNum PadicNum::operator-(const PadicNum& rhs) const { return *this + (-rhs); }

bool PadicNum::operator==(const PadicNum& rhs) const {
    if (p_ != rhs.p_) {
        return false;
    }
    if (is_zero() || rhs.is_zero()) {
        return is_zero() && rhs.is_zero();
    }
    return shift_ == rhs.shift_ && *unit_ == *rhs.unit_;
}

std::string PadicNum::to_string() const {
    if (is_zero()) {
        return "0";
    }
    if (shift_ == 0) {
        return unit_->to_string();
    }
    std::ostringstream out;
    out << p_.value() << "^" << shift_ << " * " << unit_->to_string();
    return out.str();
}

} // namespace padicspec
