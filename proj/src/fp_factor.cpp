#include "padicspec/fp_factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicspec/errors.hpp"

namespace padicspec {

namespace {

FpPoly poly_T(const Prime& p) { return FpPoly(p, {mpz_class(0), mpz_class(1)}); }

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) {
    return (a * b).divmod(m).second;
}

/// T^e mod m by binary powering; e may be huge (p^d), m nonconstant.
FpPoly pow_T_mod(const mpz_class& e, const FpPoly& m) {
    FpPoly result(m.prime(), {mpz_class(1)});
    FpPoly base = poly_T(m.prime()).divmod(m).second;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        k >>= 1;
    }
    return result;
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Exact quotient; the caller guarantees divisibility.
FpPoly exact_div(const FpPoly& num, const FpPoly& den) {
    auto [q, r] = num.divmod(den);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

/// Char-p squarefree decomposition of a monic f:
/// f = prod parts[i].first ^ parts[i].second, parts squarefree and coprime.
std::vector<std::pair<FpPoly, unsigned>> squarefree_decompose(const FpPoly& f) {
    const Prime& p = f.prime();
    std::vector<std::pair<FpPoly, unsigned>> out;

    FpPoly c = fp_gcd(f, f.derivative());
    FpPoly w = exact_div(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp_gcd(w, c);
        FpPoly fac = exact_div(w, y);
        if (fac.degree() > 0) out.emplace_back(fac, i);
        w = y;
        c = exact_div(c, y);
        ++i;
    }
    if (c.degree() > 0) {
        // Here c = h(T)^p = h(T^p); in F_p the coefficients are their own
        // p-th roots, so h reads off the coefficients at indices p*k.
        unsigned long pv = p.value();
        std::vector<mpz_class> root;
        root.resize(static_cast<std::size_t>(c.degree()) / pv + 1, mpz_class(0));
        for (std::size_t k = 0; k < root.size(); ++k) root[k] = c.coeff(k * pv);
        FpPoly h(p, std::move(root));
        for (auto& [g, m] : squarefree_decompose(h)) {
            out.emplace_back(g, m * static_cast<unsigned>(pv));
        }
    }
    return out;
}

/// Irreducible factors of a monic squarefree s, unsorted.
std::vector<FpPoly> factor_squarefree(FpPoly s) {
    const Prime& p = s.prime();
    std::vector<FpPoly> out;

    for (unsigned long r = 0; r < p.value() && s.degree() > 0; ++r) {
        mpz_class rz(static_cast<unsigned long>(r));
        if (s.eval(rz) == 0) {
            FpPoly lin(p, {mpz_class(-static_cast<long>(r)), mpz_class(1)});
            out.push_back(lin);
            s = exact_div(s, lin);
        }
    }
    if (s.degree() <= 0) return out;
    if (s.degree() <= 3) {
        // Squarefree with no roots: degree 2 or 3 cannot split further.
        out.push_back(s);
        return out;
    }
    for (unsigned d = 2; 2 * d <= static_cast<unsigned>(s.degree()); ++d) {
        for (const FpPoly& cand : enumerate_irreducibles(p, d)) {
            if (s.degree() < static_cast<int>(2 * d)) break;
            if (s.divisible_by(cand)) {
                out.push_back(cand);
                s = exact_div(s, cand);
            }
        }
    }
    if (s.degree() > 0) out.push_back(s);
    return out;
}

} // namespace

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

bool fp_is_irreducible(const FpPoly& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    FpPoly g = f.monic();
    mpz_class pz(static_cast<unsigned long>(f.prime().value()));

    mpz_class pd;
    mpz_pow_ui(pd.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d));
    if (!(pow_T_mod(pd, g) == poly_T(f.prime()).divmod(g).second)) return false;

    for (unsigned q : prime_divisors(static_cast<unsigned>(d))) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d) / q);
        FpPoly h = pow_T_mod(pe, g) - poly_T(f.prime());
        if (fp_gcd(h, g).degree() != 0) return false;
    }
    return true;
}

FpFactorization fp_factor(const FpPoly& f) {
    if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    FpFactorization out;
    out.unit = f.leading();
    if (f.degree() == 0) return out;

    FpPoly g = f.monic();
    for (const auto& [part, mult] : squarefree_decompose(g)) {
        for (const FpPoly& irr : factor_squarefree(part)) {
            out.factors.emplace_back(irr, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return FpPoly::order_less(a.first, b.first); });
    return out;
}

std::vector<FpPoly> enumerate_irreducibles(const Prime& p, unsigned degree, unsigned long cap) {
    if (degree == 0) throw std::invalid_argument("degree must be at least 1");
    mpz_class count;
    mpz_class pz(static_cast<unsigned long>(p.value()));
    mpz_pow_ui(count.get_mpz_t(), pz.get_mpz_t(), degree);
    if (count > cap) {
        throw SizeError("enumerate_irreducibles: " + std::to_string(p.value()) + "^" +
                        std::to_string(degree) + " candidates exceed cap " + std::to_string(cap));
    }

    std::vector<FpPoly> out;
    std::vector<mpz_class> c(degree + 1, mpz_class(0));
    c[degree] = 1;
    // Odometer with the highest-index coefficient fastest, so results come out
    // ascending in the (degree, constant-first lex) factor order.
    for (;;) {
        FpPoly cand(p, c);
        if (fp_is_irreducible(cand)) out.push_back(std::move(cand));
        std::size_t i = degree;
        for (;;) {
            if (i == 0) return out;
            --i;
            ++c[i];
            if (c[i] < pz) break;
            c[i] = 0;
        }
    }
}

} // namespace padicspec
