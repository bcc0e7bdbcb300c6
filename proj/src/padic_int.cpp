#include "padicspec/padic_int.hpp"

#include <sstream>
#include <stdexcept>

#include "padicspec/errors.hpp"

namespace padicspec {

mpz_class pow_ui(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

PadicInt::PadicInt(Prime p, unsigned precision, mpz_class residue)
    : p_(p), precision_(precision) {
    if (precision == 0) {
        throw std::invalid_argument("PadicInt: precision must be >= 1");
    }
    modulus_ = pow_ui(mpz_class(p.value()), precision);
    mpz_mod(residue_.get_mpz_t(), residue.get_mpz_t(), modulus_.get_mpz_t());
}

bool PadicInt::is_unit() const noexcept {
    return !mpz_divisible_ui_p(residue_.get_mpz_t(), p_.value());
}

Valuation PadicInt::valuation() const {
    if (is_zero()) {
        throw PrecisionError("valuation indeterminate: zero at precision " +
                             std::to_string(precision_));
    }
    return vp_int(residue_, p_);
}

mpz_class PadicInt::truncate(unsigned n) const {
    if (n < 1 || n > precision_) {
        throw std::out_of_range("truncate: need 1 <= n <= precision, got n=" +
                                std::to_string(n) + " at precision " +
                                std::to_string(precision_));
    }
    mpz_class m = pow_ui(mpz_class(p_.value()), n);
    mpz_class r;
    mpz_mod(r.get_mpz_t(), residue_.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::vector<mpz_class> PadicInt::truncation_sequence() const {
    std::vector<mpz_class> seq;
    seq.reserve(precision_);
    for (unsigned n = 1; n <= precision_; ++n) {
        seq.push_back(truncate(n));
    }
    return seq;
}

PadicInt PadicInt::with_precision(unsigned n) const {
    if (n < 1 || n > precision_) {
        throw std::out_of_range("with_precision: need 1 <= n <= precision, got n=" +
                                std::to_string(n) + " at precision " +
                                std::to_string(precision_));
    }
    return PadicInt(p_, n, residue_);
}

std::pair<unsigned, PadicInt> PadicInt::unit_decompose() const {
    if (is_zero()) {
        throw PrecisionError(
            "unit_decompose: zero at precision " + std::to_string(precision_) +
            ", valuation indeterminate");
    }
    mpz_class t;
    unsigned long n =
        mpz_remove(t.get_mpz_t(), residue_.get_mpz_t(), mpz_class(p_.value()).get_mpz_t());
    // residue != 0 and residue < p^N force n < N, so N - n >= 1.
    return {static_cast<unsigned>(n), PadicInt(p_, precision_ - static_cast<unsigned>(n), t)};
}

PadicInt PadicInt::invert_unit() const {
    if (!is_unit()) {
        throw std::domain_error("not invertible: positive valuation");
    }
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
        throw std::domain_error("not invertible: positive valuation");
    }
    return PadicInt(p_, precision_, inv);
}

void PadicInt::require_same_prime(const PadicInt& rhs) const {
    if (p_ != rhs.p_) {
        throw std::invalid_argument("prime mismatch: p=" + std::to_string(p_.value()) +
                                    " vs p=" + std::to_string(rhs.p_.value()));
    }
}

PadicInt PadicInt::operator+(const PadicInt& rhs) const {
    require_same_prime(rhs);
    unsigned n = std::min(precision_, rhs.precision_);
    return PadicInt(p_, n, residue_ + rhs.residue_);
}

PadicInt PadicInt::operator-(const PadicInt& rhs) const {
    require_same_prime(rhs);
    unsigned n = std::min(precision_, rhs.precision_);
    return PadicInt(p_, n, residue_ - rhs.residue_);
}

PadicInt PadicInt::operator*(const PadicInt& rhs) const {
    require_same_prime(rhs);
    unsigned n = std::min(precision_, rhs.precision_);
    return PadicInt(p_, n, residue_ * rhs.residue_);
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, precision_, -residue_); }

bool PadicInt::operator==(const PadicInt& rhs) const noexcept {
    return p_ == rhs.p_ && precision_ == rhs.precision_ && residue_ == rhs.residue_;
}

bool PadicInt::congruent(const PadicInt& rhs) const {
    require_same_prime(rhs);
    unsigned n = std::min(precision_, rhs.precision_);
    return truncate(n) == rhs.truncate(n);
}

std::vector<unsigned> PadicInt::digits() const {
    std::vector<unsigned> ds;
    ds.reserve(precision_);
    mpz_class r = residue_;
    for (unsigned i = 0; i < precision_; ++i) {
        mpz_class d = r % static_cast<unsigned long>(p_.value());
        ds.push_back(static_cast<unsigned>(d.get_ui()));
        r /= static_cast<unsigned long>(p_.value());
    }
    return ds;
}

std::string PadicInt::to_string() const {
    std::ostringstream out;
    out << "...";
    if (p_.value() <= 10) {
        for (unsigned d : digits()) out << d;
    } else {
        // Multi-digit base: separate with '|' so digit boundaries stay readable.
        bool first = true;
        for (unsigned d : digits()) {
            if (!first) out << '|';
            out << d;
            first = false;
        }
    }
    out << "_" << p_.value() << " (O(" << p_.value() << "^" << precision_ << "))";
    return out.str();
}

PadicInt embed_int(const mpz_class& x, const Prime& p, unsigned precision) {
    return PadicInt(p, precision, x);
}

PadicInt embed_rational(const mpz_class& num, const mpz_class& den, const Prime& p,
                        unsigned precision) {
    if (den == 0) {
        throw std::invalid_argument("embed_rational: zero denominator");
    }
    if (mpz_divisible_ui_p(den.get_mpz_t(), p.value())) {
        throw std::domain_error("embed_rational: denominator has positive valuation, not in Z_p");
    }
    PadicInt d = embed_int(den, p, precision);
    return embed_int(num, p, precision) * d.invert_unit();
}

} // namespace padicspec
