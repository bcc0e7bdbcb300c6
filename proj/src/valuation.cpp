#include "padicspec/valuation.hpp"

#include <stdexcept>

namespace padicspec {

long long Valuation::finite_value() const {
    if (infinite_) throw std::domain_error("valuation is infinite");
    return n_;
}

Valuation vp_int(const mpz_class& x, const Prime& p) {
    if (x == 0) return Valuation::infinity();
    mpz_class rest;
    mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), mpz_class(p.value()).get_mpz_t());
    return Valuation::finite(static_cast<long long>(k));
}

Valuation vp_rat(const mpz_class& num, const mpz_class& den, const Prime& p) {
    if (den == 0) throw std::invalid_argument("vp_rat: zero denominator");
    if (num == 0) return Valuation::infinity();
    return Valuation::finite(vp_int(num, p).finite_value() - vp_int(den, p).finite_value());
}

mpq_class abs_p(const Valuation& v, const Prime& p) {
    if (v.is_infinite()) return mpq_class(0);
    long long n = v.finite_value();
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), mpz_class(p.value()).get_mpz_t(),
               static_cast<unsigned long>(n < 0 ? -n : n));
    mpq_class q = (n >= 0) ? mpq_class(1, pw) : mpq_class(pw, 1);
    q.canonicalize();
    return q;
}

} // namespace padicspec
