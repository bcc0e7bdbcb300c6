#ifndef PADICSPEC_SPECTRUM_HPP
#define PADICSPEC_SPECTRUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "padicspec/padic_num.hpp"
#include "padicspec/poly.hpp"
#include "padicspec/prime.hpp"

namespace padicspec {

// --- point classification ----------------------------------------------------

/// The four kinds of prime ideal of Z_p[T]: (0), (p), (f) with f irreducible
/// over Q_p and primitive, (p, g) with g irreducible mod p.
enum class PointKind { GenericPoint, SpecialFiberGeneric, HorizontalPrime, ClosedPoint };

struct SpecPoint {
    PointKind kind;
    std::optional<Prime> p;             // SpecialFiberGeneric, ClosedPoint
    std::optional<IntPoly> horizontal;  // HorizontalPrime generator
    std::string certificate;            // HorizontalPrime: which irreducibility
                                        // certificate applies
    std::optional<FpPoly> closed;       // ClosedPoint: monic irreducible mod p
};

enum class ResidueKind { FiniteField, LocalFieldExtension, NonDomain, RationalFunction };

struct ResidueDescriptor {
    ResidueKind kind;
    mpz_class order;    // FiniteField: p^degree
    unsigned degree;    // FiniteField / LocalFieldExtension
    std::string text;   // NonDomain witness, or the rational function field name
};

enum class ClassifyStatus { PrimeIdeal, NotPrime, Undecided };

struct ClassifyResult {
    ClassifyStatus status;
    std::optional<SpecPoint> point;          // when PrimeIdeal
    std::optional<ResidueDescriptor> residue;
    std::string note;
};

/// Classify the ideal of Z_p[T] generated by `generators`, together with p
/// itself when include_p. Supported shapes: (), (p), (f), (p, f); other
/// shapes throw invalid_argument. An uncertifiable principal (f) comes back
/// Undecided, never guessed.
ClassifyResult classify_ideal(const Prime& p, const std::vector<IntPoly>& generators,
                              bool include_p);

// --- Q_p-side decisions ------------------------------------------------------

/// x = p^{2k} * u with u a square unit: for odd p Euler's criterion on u mod p,
/// for p = 2 the condition u = 1 mod 8 (needs the unit known to 3 digits).
/// The distinguished zero is rejected: squareness of 0 is not the question.
bool qp_is_square(const PadicNum& x);

/// Exact-integer variant: x nonzero, decided with no precision concerns.
bool int_is_qp_square(const mpz_class& x, const Prime& p);

enum class QpVerdict { Irreducible, Reducible, Undecided };

/// Evidence that f is reducible over Q_p (or over Q for the global report).
struct ReducibleWitness {
    /// "root": residue is a certified Z_p root mod p^precision.
    /// "repeated-root": disc = 0, the double root (residue when in Z_p).
    /// "reversal-root": residue r is a root of the reversed polynomial, so
    ///   1/r is a root of f in Q_p outside Z_p.
    /// "factor": a proper factor, rendered.
    /// "rational-root": value holds an exact rational root (global report).
    std::string kind;
    std::optional<mpz_class> residue;
    unsigned precision = 0;
    std::string factor;
    std::string value;
};

struct QpResult {
    QpVerdict verdict;
    std::string certificate;  // Irreducible: degree-1 | eisenstein |
                              // disc-nonsquare-deg2 | no-root-deg3
    std::optional<ReducibleWitness> witness;
    std::string note;         // Undecided: why
};

/// Decision tree over Q_p: degree 1, Eisenstein, quadratic discriminant,
/// cubic root search; degree >= 4 without Eisenstein stays undecided.
/// Requires deg f >= 1 and f primitive at p (Gauss' Lemma precondition).
QpResult qp_irreducible(const IntPoly& f, const Prime& p, unsigned precision = 50);

// --- fiber behavior ----------------------------------------------------------

enum class FiberVerdict { Blip, Split, Tangent, ContainedInFiber };

struct FiberFactor {
    FpPoly factor;  // monic irreducible
    unsigned multiplicity;
    std::optional<mpz_class> root;  // linear factors: the root in [0, p)
};

struct FiberBehavior {
    IntPoly anchor;
    Prime fiber;
    FiberVerdict verdict;
    std::vector<FiberFactor> factors;  // complete factorization of f mod p
    mpz_class residue_order;           // Blip: p^deg
    std::optional<FpPoly> repeated;    // Tangent: first repeated factor
    unsigned degree_drop;              // deg f - deg (f mod p)
};

/// One fiber's verdict: Blip (single irreducible of degree >= 2), Split (all
/// multiplicities 1), Tangent (a repeated factor), or ContainedInFiber when
/// f = 0 mod p. A drop to a nonzero constant is a Split with no factors.
FiberBehavior fiber_behavior(const IntPoly& f, const Prime& p);

struct GenericRow {
    QpVerdict verdict;
    std::string certificate;
    std::optional<ReducibleWitness> witness;
    std::string note;
    std::optional<unsigned long> at_prime;  // global Eisenstein certificate site
};

struct FiberReport {
    IntPoly anchor;
    bool global;                 // false: Spec Z_p[T]; true: Spec Z[T]
    std::vector<Prime> primes;   // the single p, or the requested prime list
    std::vector<FiberBehavior> rows;
    GenericRow generic;
};

/// The two fibers of Spec Z_p[T]: the special row via fiber_behavior and the
/// generic row via qp_irreducible (p-power content stripped first: scalars
/// are units over the field Q_p).
FiberReport zp_fiber_report(const IntPoly& f, const Prime& p);

/// One row per requested prime plus a generic row over Q: rational root test,
/// then Eisenstein at any prime dividing the lower coefficients, else undecided.
FiberReport z_fiber_report(const IntPoly& f, const std::vector<Prime>& primes);

} // namespace padicspec

#endif
