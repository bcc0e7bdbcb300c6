#include "padicspec/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicspec/errors.hpp"
#include "padicspec/fp_factor.hpp"
#include "padicspec/hensel.hpp"
#include "padicspec/int_poly_tools.hpp"
#include "padicspec/padic_int.hpp"
#include "padicspec/valuation.hpp"

namespace padicspec {

namespace {

constexpr unsigned long kRootSeedCap = 1000000;

IntPoly reverse_poly(const IntPoly& f) {
    std::vector<mpz_class> c(f.coeffs().rbegin(), f.coeffs().rend());
    return IntPoly(std::move(c));
}

/// f divided by the largest power of p dividing every coefficient.
IntPoly strip_p_content(const IntPoly& f, const Prime& p) {
    if (f.is_zero() || is_primitive_at(f, p)) return f;
    mpz_class pz(static_cast<unsigned long>(p.value()));
    long long k = -1;
    for (const auto& c : f.coeffs()) {
        if (c == 0) continue;
        long long v = vp_int(c, p).finite_value();
        if (k < 0 || v < k) k = v;
    }
    mpz_class pk = pow_ui(pz, static_cast<unsigned long>(k));
    std::vector<mpz_class> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
        out.push_back(q);
    }
    return IntPoly(std::move(out));
}

/// gcd over Q, returned as a primitive integer polynomial with positive lead.
IntPoly rational_gcd_primitive(const IntPoly& A, const IntPoly& B) {
    using QV = std::vector<mpq_class>;
    auto trim = [](QV& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto from_int = [](const IntPoly& f) {
        QV v;
        v.reserve(f.coeffs().size());
        for (const auto& c : f.coeffs()) v.emplace_back(c);
        return v;
    };
    QV a = from_int(A), b = from_int(B);
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            mpq_class q = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    if (a.empty()) return IntPoly();
    mpz_class lcm = 1;
    for (const auto& q : a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> zi;
    zi.reserve(a.size());
    mpz_class content = 0;
    for (const auto& q : a) {
        mpq_class scaled = q * mpq_class(lcm);
        zi.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zi.back().get_mpz_t());
    }
    for (auto& c : zi) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    if (zi.back() < 0)
        for (auto& c : zi) c = -c;
    return IntPoly(std::move(zi));
}

/// Certified Z_p roots with a soundness-first depth: v_p(disc) + 1 with no
/// cap, because an incomplete search must not back an "irreducible" verdict.
/// nullopt when the seed space would exceed the budget (caller stays undecided).
std::optional<std::vector<LiftedRoot>> certified_roots(const IntPoly& f, const Prime& p,
                                                       unsigned precision) {
    mpz_class disc = discriminant(f);
    if (disc == 0) return std::nullopt;
    long long need = vp_int(disc, p).finite_value() + 1;
    mpz_class count;
    mpz_class pz(static_cast<unsigned long>(p.value()));
    mpz_pow_ui(count.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(need));
    if (count > kRootSeedCap) return std::nullopt;

    auto all = roots_in_zp(f, p, precision, static_cast<unsigned>(need));
    std::vector<LiftedRoot> certified;
    for (auto& r : all)
        if (r.kind == RootKind::Certified) certified.push_back(std::move(r));
    return certified;
}

GenericRow generic_from_qp(const QpResult& q) {
    return {q.verdict, q.certificate, q.witness, q.note, std::nullopt};
}

std::string nondomain_witness(const FpFactorization& fac) {
    std::string prod;
    const bool single = fac.factors.size() == 1;
    const FpPoly* repeated = nullptr;
    for (const auto& [g, m] : fac.factors) {
        std::string gs = g.to_string();
        prod += single ? gs : "(" + gs + ")";
        if (m > 1) {
            prod += "^" + std::to_string(m);
            if (!repeated) repeated = &g;
        }
    }
    if (repeated) return prod + " (nilpotent " + repeated->to_string() + ")";
    return prod + " (zero divisors)";
}

std::string witness_text(const ReducibleWitness& w) {
    if (w.kind == "root" && w.residue)
        return "Z_p root = " + w.residue->get_str() + " at precision " +
               std::to_string(w.precision);
    if (w.kind == "repeated-root") {
        if (w.residue)
            return "repeated root = " + w.residue->get_str() + " at precision " +
                   std::to_string(w.precision);
        return "repeated root " + w.value + " in Q_p";
    }
    if (w.kind == "reversal-root" && w.residue)
        return "reciprocal of the Z_p root " + w.residue->get_str() +
               " of the reversed polynomial";
    if (w.kind == "factor") return "factor " + w.factor;
    if (w.kind == "rational-root") return "rational root " + w.value;
    return w.kind;
}

ResidueDescriptor rational_function_field(const std::string& name) {
    return {ResidueKind::RationalFunction, 0, 0, name};
}

} // namespace

// --- squares -----------------------------------------------------------------

bool int_is_qp_square(const mpz_class& x, const Prime& p) {
    if (x == 0) throw std::domain_error("int_is_qp_square: zero has no square class");
    mpz_class pz(static_cast<unsigned long>(p.value()));
    mpz_class u = x;
    unsigned long v = mpz_remove(u.get_mpz_t(), u.get_mpz_t(), pz.get_mpz_t());
    if (v % 2 != 0) return false;
    if (p.value() == 2) {
        mpz_class r;
        mpz_mod_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
        return r == 1;
    }
    mpz_class exp = (pz - 1) / 2;
    mpz_class r;
    mpz_powm(r.get_mpz_t(), u.get_mpz_t(), exp.get_mpz_t(), pz.get_mpz_t());
    return r == 1;
}

bool qp_is_square(const PadicNum& x) {
    if (x.is_zero()) throw std::domain_error("qp_is_square: zero has no square class");
    if (x.shift() % 2 != 0) return false;
    const PadicInt u = x.unit_part();
    const Prime& p = u.prime();
    if (p.value() == 2) {
        if (u.precision() < 3) {
            throw PrecisionError("qp_is_square at p=2 needs the unit known mod 8 "
                                 "(precision >= 3), have " +
                                 std::to_string(u.precision()));
        }
        mpz_class r;
        mpz_mod_ui(r.get_mpz_t(), u.residue().get_mpz_t(), 8);
        return r == 1;
    }
    mpz_class pz(static_cast<unsigned long>(p.value()));
    mpz_class exp = (pz - 1) / 2;
    mpz_class r;
    mpz_powm(r.get_mpz_t(), u.residue().get_mpz_t(), exp.get_mpz_t(), pz.get_mpz_t());
    return r == 1;
}

// --- Q_p irreducibility ------------------------------------------------------

QpResult qp_irreducible(const IntPoly& f, const Prime& p, unsigned precision) {
    const int n = f.degree();
    if (n < 1) throw std::domain_error("qp_irreducible requires degree >= 1");
    if (!is_primitive_at(f, p)) {
        throw std::domain_error("qp_irreducible: polynomial is not primitive at p "
                                "(Gauss' Lemma precondition)");
    }

    if (n == 1) return {QpVerdict::Irreducible, "degree-1", std::nullopt, ""};
    if (eisenstein(f, p)) return {QpVerdict::Irreducible, "eisenstein", std::nullopt, ""};

    if (n == 2) {
        const mpz_class a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
        const mpz_class disc = b * b - 4 * a * c;
        if (disc == 0) {
            // f = a (T - r)^2 with r = -b/(2a) in Q_p.
            mpq_class r(-b, 2 * a);
            r.canonicalize();
            ReducibleWitness w;
            w.kind = "repeated-root";
            if (vp_rat(r.get_num(), r.get_den(), p) >= Valuation::finite(0)) {
                w.residue = embed_rational(r.get_num(), r.get_den(), p, precision).residue();
                w.precision = precision;
            } else {
                w.value = r.get_str();
            }
            return {QpVerdict::Reducible, "", std::move(w), ""};
        }
        if (!int_is_qp_square(disc, p))
            return {QpVerdict::Irreducible, "disc-nonsquare-deg2", std::nullopt, ""};

        // disc is a nonzero square, so f splits over Q_p; find a concrete root.
        if (auto rs = certified_roots(f, p, precision); rs && !rs->empty()) {
            const LiftedRoot& r = rs->front();
            ReducibleWitness w;
            w.kind = "root";
            w.residue = r.alpha.residue();
            w.precision = r.alpha.precision();
            return {QpVerdict::Reducible, "", std::move(w), ""};
        }
        // Both roots lie outside Z_p; then f(0) != 0 and the reversed
        // polynomial has their reciprocals as Z_p roots.
        if (f.coeff(0) != 0) {
            if (auto rs = certified_roots(reverse_poly(f), p, precision); rs && !rs->empty()) {
                for (const auto& r : *rs) {
                    if (r.alpha.residue() == 0) continue;
                    ReducibleWitness w;
                    w.kind = "reversal-root";
                    w.residue = r.alpha.residue();
                    w.precision = r.alpha.precision();
                    return {QpVerdict::Reducible, "", std::move(w), ""};
                }
            }
        }
        ReducibleWitness w;
        w.kind = "factor";
        w.value = "splits over Q_p (disc is a square); explicit root exceeds the search budget";
        return {QpVerdict::Reducible, "", std::move(w), ""};
    }

    if (n == 3) {
        const mpz_class disc = discriminant(f);
        if (disc == 0) {
            // The repeated factor is rational: gcd(f, f') over Q has degree 1
            // or 2 and divides f properly.
            IntPoly g = rational_gcd_primitive(f, f.derivative());
            ReducibleWitness w;
            w.kind = "factor";
            w.factor = g.to_string();
            return {QpVerdict::Reducible, "", std::move(w), ""};
        }
        auto rs = certified_roots(f, p, precision);
        if (rs && !rs->empty()) {
            const LiftedRoot& r = rs->front();
            ReducibleWitness w;
            w.kind = "root";
            w.residue = r.alpha.residue();
            w.precision = r.alpha.precision();
            return {QpVerdict::Reducible, "", std::move(w), ""};
        }
        const bool unit_lead =
            !mpz_divisible_p(f.leading().get_mpz_t(),
                             mpz_class(static_cast<unsigned long>(p.value())).get_mpz_t());
        if (!unit_lead) {
            return {QpVerdict::Undecided, "", std::nullopt,
                    "degree-3 with non-unit leading coefficient: no Z_p root found, but a "
                    "root may lie in Q_p outside Z_p"};
        }
        if (!rs) {
            return {QpVerdict::Undecided, "", std::nullopt,
                    "root search at this discriminant valuation exceeds the seed budget"};
        }
        // Unit lead: all Q_p roots are integral, and the search is complete at
        // depth v(disc)+1, so an empty result proves irreducibility.
        return {QpVerdict::Irreducible, "no-root-deg3", std::nullopt, ""};
    }

    return {QpVerdict::Undecided, "", std::nullopt,
            "degree >= 4 without an Eisenstein certificate; no decision procedure applies"};
}

// --- ideal classification ----------------------------------------------------

ClassifyResult classify_ideal(const Prime& p, const std::vector<IntPoly>& generators,
                              bool include_p) {
    std::vector<IntPoly> gens;
    for (const auto& f : generators)
        if (!f.is_zero()) gens.push_back(f);
    if (gens.size() > 1) {
        throw std::invalid_argument(
            "unsupported generator shape: expected (), (p), (f), or (p, f)");
    }
    const mpz_class pz(static_cast<unsigned long>(p.value()));

    if (!include_p) {
        if (gens.empty()) {
            SpecPoint pt{PointKind::GenericPoint, std::nullopt, std::nullopt, "", std::nullopt};
            return {ClassifyStatus::PrimeIdeal, pt, rational_function_field("Q_p(T)"),
                    "the zero ideal: generic point of Spec Z_p[T]"};
        }
        const IntPoly& f = gens[0];
        if (f.degree() == 0) {
            long long k = vp_int(f.coeff(0), p).finite_value();
            if (k == 0) {
                return {ClassifyStatus::NotPrime, std::nullopt,
                        ResidueDescriptor{ResidueKind::NonDomain, 0, 0,
                                          "zero ring (the generator is a unit of Z_p)"},
                        "the constant generates the unit ideal"};
            }
            if (k == 1) {
                SpecPoint pt{PointKind::SpecialFiberGeneric, p, std::nullopt, "", std::nullopt};
                return {ClassifyStatus::PrimeIdeal, pt, rational_function_field("F_p(T)"),
                        "the constant is p times a unit, so the ideal is (p)"};
            }
            return {ClassifyStatus::NotPrime, std::nullopt,
                    ResidueDescriptor{ResidueKind::NonDomain, 0, 0,
                                      "p^" + std::to_string(k) + " (nilpotent p)"},
                    "a proper power of p generates a non-radical ideal"};
        }
        if (!is_primitive_at(f, p)) {
            IntPoly g = strip_p_content(f, p);
            long long k = -1;
            for (const auto& c : f.coeffs()) {
                if (c == 0) continue;
                long long v = vp_int(c, p).finite_value();
                if (k < 0 || v < k) k = v;
            }
            std::string pk = k == 1 ? "p" : "p^" + std::to_string(k);
            return {ClassifyStatus::NotPrime, std::nullopt,
                    ResidueDescriptor{ResidueKind::NonDomain, 0, 0,
                                      pk + "*(" + g.to_string() + ") (zero divisors)"},
                    "the generator factors as a p-power times a nonconstant polynomial"};
        }
        QpResult q = qp_irreducible(f, p);
        if (q.verdict == QpVerdict::Irreducible) {
            IntPoly gen = f.leading() < 0 ? -f : f;
            SpecPoint pt{PointKind::HorizontalPrime, std::nullopt, gen, q.certificate,
                         std::nullopt};
            return {ClassifyStatus::PrimeIdeal, pt,
                    ResidueDescriptor{ResidueKind::LocalFieldExtension, 0,
                                      static_cast<unsigned>(f.degree()), ""},
                    ""};
        }
        if (q.verdict == QpVerdict::Reducible) {
            return {ClassifyStatus::NotPrime, std::nullopt,
                    ResidueDescriptor{ResidueKind::NonDomain, 0, 0,
                                      witness_text(*q.witness) + " (zero divisors)"},
                    "the generator is reducible over Q_p"};
        }
        return {ClassifyStatus::Undecided, std::nullopt, std::nullopt, q.note};
    }

    if (gens.empty()) {
        SpecPoint pt{PointKind::SpecialFiberGeneric, p, std::nullopt, "", std::nullopt};
        return {ClassifyStatus::PrimeIdeal, pt, rational_function_field("F_p(T)"),
                "the special fiber's generic point (p)"};
    }
    const IntPoly& f = gens[0];
    FpPoly fbar = reduce_mod_p(f, p);
    if (fbar.is_zero()) {
        SpecPoint pt{PointKind::SpecialFiberGeneric, p, std::nullopt, "", std::nullopt};
        return {ClassifyStatus::PrimeIdeal, pt, rational_function_field("F_p(T)"),
                "f = 0 mod p, so (p, f) = (p)"};
    }
    if (fbar.degree() == 0) {
        return {ClassifyStatus::NotPrime, std::nullopt,
                ResidueDescriptor{ResidueKind::NonDomain, 0, 0,
                                  "zero ring (f is a unit mod p)"},
                "(p, f) contains a unit"};
    }
    FpPoly m = fbar.monic();
    if (fp_is_irreducible(m)) {
        mpz_class order;
        mpz_pow_ui(order.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(m.degree()));
        SpecPoint pt{PointKind::ClosedPoint, p, std::nullopt, "", m};
        return {ClassifyStatus::PrimeIdeal, pt,
                ResidueDescriptor{ResidueKind::FiniteField, order,
                                  static_cast<unsigned>(m.degree()), ""},
                ""};
    }
    return {ClassifyStatus::NotPrime, std::nullopt,
            ResidueDescriptor{ResidueKind::NonDomain, 0, 0, nondomain_witness(fp_factor(m))},
            "f is reducible mod p"};
}

// --- fibers ------------------------------------------------------------------

FiberBehavior fiber_behavior(const IntPoly& f, const Prime& p) {
    if (f.degree() < 1)
        throw std::domain_error("fiber_behavior requires a nonconstant polynomial");
    FiberBehavior out{f, p, FiberVerdict::Split, {}, 0, std::nullopt, 0};
    FpPoly fbar = reduce_mod_p(f, p);
    if (fbar.is_zero()) {
        out.verdict = FiberVerdict::ContainedInFiber;
        out.degree_drop = static_cast<unsigned>(f.degree());
        return out;
    }
    out.degree_drop = static_cast<unsigned>(f.degree() - fbar.degree());
    if (fbar.degree() == 0) return out;  // a unit constant: Split with no factors

    const mpz_class pz(static_cast<unsigned long>(p.value()));
    FpFactorization fac = fp_factor(fbar);
    bool any_repeat = false;
    for (const auto& [g, m] : fac.factors) {
        FiberFactor ff{g, m, std::nullopt};
        if (g.degree() == 1) {
            mpz_class root = -g.coeff(0);
            mpz_mod(root.get_mpz_t(), root.get_mpz_t(), pz.get_mpz_t());
            ff.root = root;
        }
        if (m >= 2 && !any_repeat) {
            any_repeat = true;
            out.repeated = g;
        }
        out.factors.push_back(std::move(ff));
    }
    if (any_repeat) {
        out.verdict = FiberVerdict::Tangent;
    } else if (out.factors.size() == 1 && out.factors[0].factor.degree() >= 2) {
        out.verdict = FiberVerdict::Blip;
        mpz_pow_ui(out.residue_order.get_mpz_t(), pz.get_mpz_t(),
                   static_cast<unsigned long>(out.factors[0].factor.degree()));
    } else {
        out.verdict = FiberVerdict::Split;
    }
    return out;
}

FiberReport zp_fiber_report(const IntPoly& f, const Prime& p) {
    if (f.degree() < 1)
        throw std::domain_error("zp_fiber_report requires a nonconstant anchor");
    FiberReport rep{f, false, {p}, {fiber_behavior(f, p)}, {}};
    // Scalars are units over the field Q_p, so the generic verdict is taken on
    // the p-power-content-free part.
    rep.generic = generic_from_qp(qp_irreducible(strip_p_content(f, p), p));
    return rep;
}

FiberReport z_fiber_report(const IntPoly& f, const std::vector<Prime>& primes) {
    if (f.degree() < 1)
        throw std::domain_error("z_fiber_report requires a nonconstant anchor");
    FiberReport rep{f, true, primes, {}, {}};
    for (const Prime& p : primes) rep.rows.push_back(fiber_behavior(f, p));

    const int n = f.degree();
    if (n == 1) {
        rep.generic = {QpVerdict::Irreducible, "degree-1", std::nullopt, "", std::nullopt};
        return rep;
    }
    try {
        auto roots = rational_roots(f);
        if (!roots.empty()) {
            ReducibleWitness w;
            w.kind = "rational-root";
            w.value = roots.front().get_str();
            rep.generic = {QpVerdict::Reducible, "", std::move(w), "", std::nullopt};
            return rep;
        }
        if (n <= 3) {
            rep.generic = {QpVerdict::Irreducible, "no-rational-root", std::nullopt, "",
                           std::nullopt};
            return rep;
        }
    } catch (const SizeError&) {
        // Coefficients too hard to factor for the root test; fall through.
    }
    for (const Prime& q : eisenstein_candidate_primes(f)) {
        if (eisenstein(f, q)) {
            rep.generic = {QpVerdict::Irreducible, "eisenstein", std::nullopt, "",
                           q.value()};
            return rep;
        }
    }
    rep.generic = {QpVerdict::Undecided, "", std::nullopt,
                   "no rational root found and no Eisenstein prime applies; "
                   "irreducibility over Q is undecided here",
                   std::nullopt};
    return rep;
}

} // namespace padicspec
