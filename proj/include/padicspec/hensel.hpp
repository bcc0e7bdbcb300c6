#ifndef PADICSPEC_HENSEL_HPP
#define PADICSPEC_HENSEL_HPP

#include <stdexcept>
#include <vector>

#include "padicspec/padic_int.hpp"
#include "padicspec/poly.hpp"
#include "padicspec/valuation.hpp"

namespace padicspec {

/// Checked hypotheses of the strong lifting theorem at a seed.
/// v_f = infinity records "f(seed) is 0 at the working precision": the true
/// valuation is >= working_precision, which still decides strong_ok whenever
/// working_precision > 2 * v_fprime.
struct HenselCertificate {
    PadicInt seed;
    Valuation v_f;
    Valuation v_fprime;
    bool strong_ok;
    bool weak_ok;
    unsigned working_precision;
};

/// A seed failed the strong hypothesis v(f(a)) > 2 v(f'(a)).
class HenselHypothesisError : public std::runtime_error {
public:
    HenselHypothesisError(const std::string& what, HenselCertificate cert)
        : std::runtime_error(what), cert_(std::move(cert)) {}

    const HenselCertificate& certificate() const noexcept { return cert_; }

private:
    HenselCertificate cert_;
};

/// Certified: the unique root in the seed's convergence ball, Newton-refined.
/// ExactAtPrecision: f(seed) is 0 at the working precision but the strong
/// hypothesis is not decidable there; reported as-is, never refined.
enum class RootKind { Certified, ExactAtPrecision };

struct LiftedRoot {
    PadicInt alpha;
    RootKind kind;
    HenselCertificate certificate;
    /// v(alpha - seed); equals v_f - v_fprime for certified roots
    /// (conclusion "|alpha - a|_p = |f(a)/f'(a)|_p").
    Valuation distance_valuation;
    /// v(f'(alpha)); equals the certificate's v_fprime for certified roots.
    Valuation fprime_valuation;
};

/// Exact valuations of f(a) and f'(a) plus both hypothesis flags.
/// Throws PrecisionError when either valuation is indeterminate in a way that
/// blocks the verdict: f'(a) = 0 at precision, or f(a) = 0 at a working
/// precision W with W <= 2 v(f'(a)).
HenselCertificate certify(const ZpPoly& f, const PadicInt& a);

/// Newton iteration from a strong seed; alpha is returned at target_precision
/// and is canonical (independent of digits of a beyond its precision).
/// Requires f known to target_precision + v(f'(a)) digits.
LiftedRoot lift(const ZpPoly& f, const PadicInt& a, unsigned target_precision);

/// Exact-coefficient convenience: f over Z, integer seed.
LiftedRoot lift(const IntPoly& f, const Prime& p, const mpz_class& seed,
                unsigned target_precision);

/// All Z_p roots found from seeds r in [0, p^search_depth): strong seeds are
/// lifted (kind Certified, precision f.precision() - v(f'(seed))); seeds where
/// f vanishes at full precision without a decidable strong certificate are
/// reported as kind ExactAtPrecision. Deduplicated by congruence, certified
/// roots preferred; ordered by seed residue ascending.
/// Throws SizeError when p^search_depth exceeds 10^6 seeds.
std::vector<LiftedRoot> roots_in_zp(const ZpPoly& f, unsigned search_depth);

/// Default depth: v_p(disc) + 1 capped at 6 (6 when disc vanishes), computed
/// from the coefficient residues.
std::vector<LiftedRoot> roots_in_zp(const ZpPoly& f);

/// Exact-coefficient convenience: integer content is stripped first (it only
/// inflates f' valuations; the roots are unchanged), then f is viewed at the
/// given precision.
std::vector<LiftedRoot> roots_in_zp(const IntPoly& f, const Prime& p,
                                    unsigned precision = 50);
std::vector<LiftedRoot> roots_in_zp(const IntPoly& f, const Prime& p, unsigned precision,
                                    unsigned search_depth);

/// v_p(disc f) + 1 capped at 6; 6 when disc = 0. Degree >= 1 required.
unsigned default_search_depth(const IntPoly& f, const Prime& p);

} // namespace padicspec

#endif
