#include "padicspec/hensel.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "padicspec/errors.hpp"
#include "padicspec/int_poly_tools.hpp"

namespace padicspec {

namespace {

constexpr unsigned long kSeedCap = 1000000;

void require_same_prime(const ZpPoly& f, const PadicInt& a) {
    if (f.prime().value() != a.prime().value()) {
        throw std::invalid_argument("prime mismatch: p=" + std::to_string(f.prime().value()) +
                                    " vs p=" + std::to_string(a.prime().value()));
    }
}

mpz_class eval_mod(const std::vector<mpz_class>& coeffs, const mpz_class& x,
                   const mpz_class& mod) {
    mpz_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    }
    return acc;
}

std::vector<mpz_class> residues_of(const ZpPoly& f) {
    std::vector<mpz_class> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.residue());
    return out;
}

IntPoly strip_content(const IntPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g <= 1) return f;
    std::vector<mpz_class> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        out.push_back(q);
    }
    return IntPoly(std::move(out));
}

} // namespace

HenselCertificate certify(const ZpPoly& f, const PadicInt& a) {
    require_same_prime(f, a);
    const unsigned W0 = std::min(f.precision(), a.precision());
    PadicInt aw(f.prime(), W0, a.residue());
    PadicInt fa = f.eval(aw);
    PadicInt fpa = f.derivative().eval(aw);

    if (fpa.is_zero()) {
        throw PrecisionError("certify: f'(a) is 0 at precision " + std::to_string(W0) +
                             "; its valuation is indeterminate, increase precision");
    }
    Valuation e = fpa.valuation();
    const long long ev = e.finite_value();

    if (fa.is_zero()) {
        // True v(f(a)) >= W0. Strong needs v > 2e: decidable only when W0 > 2e.
        if (static_cast<long long>(W0) <= 2 * ev) {
            throw PrecisionError("certify: f(a) is 0 at precision " + std::to_string(W0) +
                                 " but the strong test needs v(f(a)) > " + std::to_string(2 * ev) +
                                 "; increase precision");
        }
        return {aw, Valuation::infinity(), e, true, ev == 0, W0};
    }

    Valuation vf = fa.valuation();
    bool strong = vf > Valuation::finite(2 * ev);
    bool weak = vf >= Valuation::finite(1) && ev == 0;
    return {aw, vf, e, strong, weak, W0};
}

LiftedRoot lift(const ZpPoly& f, const PadicInt& a, unsigned target_precision) {
    if (target_precision == 0)
        throw std::invalid_argument("target precision must be at least 1");

    HenselCertificate cert = certify(f, a);
    if (!cert.strong_ok) {
        throw HenselHypothesisError("Hensel hypothesis fails: v(f(a)) = " + cert.v_f.to_string() +
                                        " <= 2*v(f'(a)) = " +
                                        std::to_string(2 * cert.v_fprime.finite_value()),
                                    cert);
    }
    const unsigned e = static_cast<unsigned>(cert.v_fprime.finite_value());
    if (f.precision() < target_precision + e) {
        throw PrecisionError("lift: target precision " + std::to_string(target_precision) +
                             " with v(f'(a)) = " + std::to_string(e) +
                             " needs f known to precision " + std::to_string(target_precision + e) +
                             ", have " + std::to_string(f.precision()));
    }

    const Prime& p = f.prime();
    const mpz_class pz(static_cast<unsigned long>(p.value()));
    const unsigned W = std::min(f.precision(), target_precision + 2 * e + 2);
    const mpz_class P = pow_ui(pz, W);
    const std::vector<mpz_class> fc = residues_of(f);
    const std::vector<mpz_class> dc = residues_of(f.derivative());

    // Digits of a beyond its precision are immaterial: any extension stays in
    // the convergence ball of the same unique root, so extend with zeros.
    mpz_class x;
    mpz_mod(x.get_mpz_t(), a.residue().get_mpz_t(), P.get_mpz_t());

    const unsigned long stop = target_precision + e;
    long long prev_m = -1;
    for (int iter = 0;; ++iter) {
        if (iter > 200) throw std::logic_error("Newton iteration failed to converge");
        mpz_class fx = eval_mod(fc, x, P);
        if (fx == 0) break;  // v(f(x)) >= W >= target + e
        unsigned long m = mpz_remove(fx.get_mpz_t(), fx.get_mpz_t(), pz.get_mpz_t());
        if (prev_m >= 0 && static_cast<long long>(m) < 2 * prev_m - 2 * static_cast<long long>(e))
            throw std::logic_error("quadratic convergence invariant violated");
        if (m >= stop) break;
        prev_m = static_cast<long long>(m);

        mpz_class fpx = eval_mod(dc, x, P);
        unsigned long ek = fpx == 0
                               ? W
                               : mpz_remove(fpx.get_mpz_t(), fpx.get_mpz_t(), pz.get_mpz_t());
        if (ek != e) throw std::logic_error("derivative valuation drifted during Newton iteration");

        // delta = f(x)/f'(x) = p^{m-e} * u * t^{-1}, exact in Z_p since m > 2e >= e.
        const mpz_class Pme = pow_ui(pz, W - e);
        mpz_class tinv;
        mpz_invert(tinv.get_mpz_t(), fpx.get_mpz_t(), Pme.get_mpz_t());
        mpz_class delta = fx * tinv;
        mpz_mod(delta.get_mpz_t(), delta.get_mpz_t(), Pme.get_mpz_t());
        delta *= pow_ui(pz, m - e);
        x -= delta;
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
    }

    mpz_class ar;
    mpz_mod(ar.get_mpz_t(), x.get_mpz_t(), pow_ui(pz, target_precision).get_mpz_t());
    PadicInt alpha(p, target_precision, ar);

    // Defining postcondition, re-checked by evaluation rather than trusted.
    if (!f.eval(alpha).is_zero())
        throw std::logic_error("lifted root fails f(alpha) = 0 at the result precision");

    // Conclusion (1): |alpha - a|_p = |f(a)/f'(a)|_p.
    Valuation dist = Valuation::infinity();
    if (!cert.v_f.is_infinite()) {
        const long long d = cert.v_f.finite_value() - static_cast<long long>(e);
        dist = Valuation::finite(d);
        const unsigned meas = std::min(target_precision, a.precision());
        mpz_class diff = x - a.residue();
        mpz_mod(diff.get_mpz_t(), diff.get_mpz_t(), pow_ui(pz, meas).get_mpz_t());
        if (d < static_cast<long long>(meas)) {
            bool ok = diff != 0 &&
                      mpz_remove(diff.get_mpz_t(), diff.get_mpz_t(), pz.get_mpz_t()) ==
                          static_cast<unsigned long>(d);
            if (!ok) throw std::logic_error("distance conclusion |alpha-a| = |f(a)/f'(a)| violated");
        } else if (diff != 0) {
            throw std::logic_error("distance conclusion |alpha-a| = |f(a)/f'(a)| violated");
        }
    }

    // Conclusion (2): |f'(alpha)|_p = |f'(a)|_p, measurable when e < target.
    Valuation fpv = Valuation::finite(static_cast<long long>(e));
    if (e < target_precision) {
        PadicInt fpa = f.derivative().eval(alpha);
        if (fpa.is_zero() || fpa.valuation() != fpv)
            throw std::logic_error("derivative valuation conclusion violated");
    }

    return {std::move(alpha), RootKind::Certified, std::move(cert), dist, fpv};
}

LiftedRoot lift(const IntPoly& f, const Prime& p, const mpz_class& seed,
                unsigned target_precision) {
    if (f.degree() < 1) throw std::domain_error("lift requires degree >= 1");
    if (target_precision == 0)
        throw std::invalid_argument("target precision must be at least 1");

    // Exact arithmetic decides v(f'(seed)) up front, fixing the working precision.
    const mpz_class fps = f.derivative().eval(seed);
    if (fps == 0) {
        const mpz_class fs = f.eval(seed);
        PadicInt sp(p, target_precision, seed);
        HenselCertificate cert{sp, vp_int(fs, p), Valuation::infinity(), false, false,
                               target_precision};
        throw HenselHypothesisError(fs == 0
                                        ? "f'(a) = 0 exactly: a is a multiple root, no unique lift"
                                        : "Hensel hypothesis fails: f'(a) = 0 exactly",
                                    cert);
    }
    const unsigned e = static_cast<unsigned>(vp_int(fps, p).finite_value());
    const unsigned W = target_precision + 2 * e + 2;
    return lift(to_zp(f, p, W), PadicInt(p, W, seed), target_precision);
}

std::vector<LiftedRoot> roots_in_zp(const ZpPoly& f, unsigned search_depth) {
    if (f.degree() < 1) throw std::domain_error("roots_in_zp requires degree >= 1");
    if (search_depth == 0) throw std::invalid_argument("search_depth must be at least 1");
    const Prime& p = f.prime();
    const mpz_class pz(static_cast<unsigned long>(p.value()));
    const mpz_class seed_count = pow_ui(pz, search_depth);
    if (seed_count > kSeedCap) {
        throw SizeError("roots_in_zp: " + std::to_string(p.value()) + "^" +
                        std::to_string(search_depth) + " seeds exceed cap " +
                        std::to_string(kSeedCap));
    }
    const unsigned N = f.precision();
    const FpPoly fbar = reduce_mod_p(f);
    const ZpPoly fprime = f.derivative();

    std::vector<LiftedRoot> found;
    for (mpz_class r = 0; r < seed_count; ++r) {
        mpz_class rbar;
        mpz_mod(rbar.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
        // Mod-p prefilter: f(x) = f(r) mod p for every x = r, so a nonzero
        // residue rules the whole class out.
        if (!fbar.is_zero() && fbar.eval(rbar) != 0) continue;

        PadicInt seed(p, N, r);
        std::optional<HenselCertificate> cert;
        try {
            cert = certify(f, seed);
        } catch (const PrecisionError&) {
            PadicInt fa = f.eval(seed);
            // f'(seed) indeterminate with f(seed) of exact valuation: a
            // certifiable root elsewhere keeps its own determinate seed, so
            // skipping here cannot lose one.
            if (!fa.is_zero()) continue;
            PadicInt fpa = fprime.eval(seed);
            Valuation vfp = fpa.is_zero() ? Valuation::infinity() : fpa.valuation();
            HenselCertificate exact_cert{seed, Valuation::infinity(), vfp, false, false, N};
            found.push_back(LiftedRoot{seed, RootKind::ExactAtPrecision, std::move(exact_cert),
                                       Valuation::infinity(), vfp});
            continue;
        }
        if (!cert->strong_ok) continue;
        const unsigned e = static_cast<unsigned>(cert->v_fprime.finite_value());
        found.push_back(lift(f, seed, N - e));
    }

    std::vector<LiftedRoot> out;
    for (auto& cand : found) {
        bool merged = false;
        for (auto& kept : out) {
            const unsigned m = std::min(kept.alpha.precision(), cand.alpha.precision());
            mpz_class d = kept.alpha.residue() - cand.alpha.residue();
            mpz_mod(d.get_mpz_t(), d.get_mpz_t(), pow_ui(pz, m).get_mpz_t());
            if (d == 0) {
                if (kept.kind == RootKind::ExactAtPrecision && cand.kind == RootKind::Certified)
                    kept = std::move(cand);
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end(), [](const LiftedRoot& a, const LiftedRoot& b) {
        return a.certificate.seed.residue() < b.certificate.seed.residue();
    });
    return out;
}

std::vector<LiftedRoot> roots_in_zp(const ZpPoly& f) {
    // Depth heuristic from the residue representatives; the exact overload
    // computes the true discriminant instead.
    unsigned k = 6;
    IntPoly rep(residues_of(f));
    if (rep.degree() >= 1) {
        mpz_class disc = discriminant(rep);
        if (disc != 0) {
            long long v = vp_int(disc, f.prime()).finite_value();
            k = static_cast<unsigned>(std::min<long long>(v + 1, 6));
        }
    }
    return roots_in_zp(f, k);
}

std::vector<LiftedRoot> roots_in_zp(const IntPoly& f, const Prime& p, unsigned precision,
                                    unsigned search_depth) {
    if (f.degree() < 1) throw std::domain_error("roots_in_zp requires degree >= 1");
    IntPoly g = strip_content(f);
    return roots_in_zp(to_zp(g, p, precision), search_depth);
}

std::vector<LiftedRoot> roots_in_zp(const IntPoly& f, const Prime& p, unsigned precision) {
    if (f.degree() < 1) throw std::domain_error("roots_in_zp requires degree >= 1");
    IntPoly g = strip_content(f);
    return roots_in_zp(to_zp(g, p, precision), default_search_depth(g, p));
}

unsigned default_search_depth(const IntPoly& f, const Prime& p) {
    if (f.degree() < 1) throw std::domain_error("default_search_depth requires degree >= 1");
    mpz_class disc = discriminant(f);
    if (disc == 0) return 6;
    long long v = vp_int(disc, p).finite_value();
    return static_cast<unsigned>(std::min<long long>(v + 1, 6));
}

} // namespace padicspec
