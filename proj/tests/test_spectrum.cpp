#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "padicspec/errors.hpp"
#include "padicspec/hensel.hpp"
#include "padicspec/padic_num.hpp"
#include "padicspec/parse.hpp"
#include "padicspec/poly.hpp"
#include "padicspec/prime.hpp"
#include "padicspec/report_json.hpp"
#include "padicspec/spectrum.hpp"

using namespace padicspec;

namespace {

mpz_class zpow(unsigned long p, unsigned n) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, n);
    return m;
}

bool brute_square_mod(const mpz_class& u, unsigned long pv, unsigned n) {
    const mpz_class m = zpow(pv, n);
    mpz_class target;
    mpz_mod(target.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
    for (mpz_class x = 0; x < m; ++x)
        if ((x * x - target) % m == 0) return true;
    return false;
}

} // namespace

TEST_CASE("square detection matches brute force over units") {
    for (unsigned long pv : {2UL, 3UL, 5UL}) {
        const Prime p(pv);
        const mpz_class m5 = zpow(pv, 5);
        for (mpz_class u = 1; u < m5; ++u) {
            if (u % pv == 0) continue;
            CAPTURE(pv);
            CAPTURE(u.get_str());
            CHECK(int_is_qp_square(u, p) == brute_square_mod(u, pv, 5));
        }
    }
}

TEST_CASE("square detection handles valuations and signs") {
    const Prime p2(2), p3(3), p5(5);
    CHECK(int_is_qp_square(13, p3));  // 16 = 13 + 3 at low precision; lifts
    CHECK(!int_is_qp_square(3, p3));  // odd valuation
    CHECK(int_is_qp_square(9, p3));   // even valuation, unit square
    CHECK(int_is_qp_square(-1, p5));  // 2^2 = 4 = -1 mod 5
    CHECK(!int_is_qp_square(-1, p3)); // -1 = 2 mod 3, non-residue
    CHECK(int_is_qp_square(-7, p2));  // -7 = 1 mod 8
    CHECK(int_is_qp_square(17, p2));  // 17 = 1 mod 8
    CHECK(!int_is_qp_square(3, p2));  // 3 mod 8
    CHECK(!int_is_qp_square(12, p2)); // 12 = 4*3
    CHECK(int_is_qp_square(16, p2));
    CHECK_THROWS_AS(int_is_qp_square(0, p2), std::domain_error);

    CHECK(qp_is_square(PadicNum::from_rational(1, 4, p2, 8)));
    CHECK(!qp_is_square(PadicNum::from_rational(-1, 2, p2, 8)));
    CHECK(qp_is_square(PadicNum::from_rational(13, 1, p3, 8)));
    CHECK_THROWS_AS(qp_is_square(PadicNum::zero(p3)), std::domain_error);
    // p = 2 needs the unit mod 8
    CHECK_THROWS_AS(qp_is_square(PadicNum::from_padic_int(PadicInt(p2, 2, 1))),
                    PrecisionError);
}

TEST_CASE("qp irreducibility certificates") {
    const Prime p2(2), p3(3), p5(5), p7(7);

    auto r = qp_irreducible(parse_poly("T-5"), p7);
    CHECK(r.verdict == QpVerdict::Irreducible);
    CHECK(r.certificate == "degree-1");

    r = qp_irreducible(parse_poly("T^2-3"), p3);
    CHECK(r.verdict == QpVerdict::Irreducible);
    CHECK(r.certificate == "eisenstein");

    r = qp_irreducible(parse_poly("T^2+1"), p7);
    CHECK(r.verdict == QpVerdict::Irreducible);
    CHECK(r.certificate == "disc-nonsquare-deg2");

    r = qp_irreducible(parse_poly("T^2+1"), p5);
    CHECK(r.verdict == QpVerdict::Reducible);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind == "root");
    CHECK(*r.witness->residue % 5 == 2);

    r = qp_irreducible(parse_poly("T^2-13"), p3);
    CHECK(r.verdict == QpVerdict::Reducible);
    CHECK(*r.witness->residue % 3 == 1);

    r = qp_irreducible(parse_poly("T^2+T+1"), p2);
    CHECK(r.verdict == QpVerdict::Irreducible);
    CHECK(r.certificate == "disc-nonsquare-deg2");

    r = qp_irreducible(parse_poly("T^2-2*T+1"), p7);
    CHECK(r.verdict == QpVerdict::Reducible);
    CHECK(r.witness->kind == "repeated-root");
    CHECK(*r.witness->residue == 1);

    r = qp_irreducible(parse_poly("T^3+T+1"), p5);
    CHECK(r.verdict == QpVerdict::Irreducible);
    CHECK(r.certificate == "no-root-deg3");

    r = qp_irreducible(parse_poly("T^3-T"), p5);
    CHECK(r.verdict == QpVerdict::Reducible);
    CHECK(r.witness->kind == "root");

    r = qp_irreducible(parse_poly("T^3"), p5);
    CHECK(r.verdict == QpVerdict::Reducible);
    CHECK(r.witness->kind == "factor");
    CHECK(r.witness->factor == "T^2");

    // root of the reversal in pZ_p: the root of f itself lies outside Z_p
    r = qp_irreducible(parse_poly("4*T^2-1"), p2);
    CHECK(r.verdict == QpVerdict::Reducible);
    CHECK(r.witness->kind == "reversal-root");

    r = qp_irreducible(parse_poly("T^4+1"), p7);
    CHECK(r.verdict == QpVerdict::Undecided);
    CHECK(!r.note.empty());

    r = qp_irreducible(parse_poly("T^4+2"), p2);
    CHECK(r.verdict == QpVerdict::Irreducible);
    CHECK(r.certificate == "eisenstein");

    CHECK_THROWS_AS(qp_irreducible(parse_poly("7"), p7), std::domain_error);
    CHECK_THROWS_AS(qp_irreducible(parse_poly("3*T+3"), p3), std::domain_error);
}

TEST_CASE("one mod four law for T^2+1") {
    const IntPoly f = parse_poly("T^2+1");
    for (unsigned long pv = 2; pv <= 37; ++pv) {
        if (!is_prime_u64(pv)) continue;
        const auto r = qp_irreducible(f, Prime(pv));
        CAPTURE(pv);
        if (pv % 4 == 1) {
            CHECK(r.verdict == QpVerdict::Reducible);
        } else {
            CHECK(r.verdict == QpVerdict::Irreducible);
        }
    }
}

TEST_CASE("monic quadratics never come back undecided") {
    // Three routes agree: verdict, discriminant squareness, root existence.
    for (unsigned long pv : {2UL, 3UL, 5UL}) {
        const Prime p(pv);
        for (int b = -4; b <= 4; ++b) {
            for (int c = -4; c <= 4; ++c) {
                const IntPoly f = IntPoly({c, b, 1});
                CAPTURE(pv);
                CAPTURE(f.to_string());
                const auto r = qp_irreducible(f, p);
                REQUIRE(r.verdict != QpVerdict::Undecided);
                const mpz_class disc = mpz_class(b) * b - 4 * mpz_class(c);
                if (disc == 0) {
                    CHECK(r.verdict == QpVerdict::Reducible);
                } else {
                    const bool square = int_is_qp_square(disc, p);
                    CHECK((r.verdict == QpVerdict::Reducible) == square);
                    // monic quadratic: reducible over Q_p iff a root lies in Z_p
                    const auto roots = roots_in_zp(f, p, 8);
                    bool has_certified = false;
                    for (const auto& rt : roots)
                        if (rt.kind == RootKind::Certified) has_certified = true;
                    CHECK(has_certified == square);
                }
            }
        }
    }
}

TEST_CASE("fiber behavior reproduces the three worked quotients") {
    const IntPoly f = parse_poly("T^2+1");

    const FiberBehavior t2 = fiber_behavior(f, Prime(2));
    CHECK(t2.verdict == FiberVerdict::Tangent);
    REQUIRE(t2.repeated.has_value());
    CHECK(t2.repeated->to_string() == "T+1");
    REQUIRE(t2.factors.size() == 1);
    CHECK(t2.factors[0].multiplicity == 2);
    CHECK(*t2.factors[0].root == 1);

    const FiberBehavior t5 = fiber_behavior(f, Prime(5));
    CHECK(t5.verdict == FiberVerdict::Split);
    REQUIRE(t5.factors.size() == 2);
    CHECK(t5.factors[0].factor.to_string() == "T+2");
    CHECK(t5.factors[1].factor.to_string() == "T+3");
    CHECK(*t5.factors[0].root == 3);
    CHECK(*t5.factors[1].root == 2);

    const FiberBehavior t7 = fiber_behavior(f, Prime(7));
    CHECK(t7.verdict == FiberVerdict::Blip);
    CHECK(t7.residue_order == 49);
    REQUIRE(t7.factors.size() == 1);
    CHECK(t7.factors[0].factor.degree() == 2);
}

TEST_CASE("fiber behavior edge shapes") {
    // degree drop to a unit constant: split over the empty set
    const FiberBehavior drop = fiber_behavior(parse_poly("7*T^2+T+1"), Prime(7));
    CHECK(drop.verdict == FiberVerdict::Split);
    CHECK(drop.degree_drop == 1);
    REQUIRE(drop.factors.size() == 1);
    CHECK(*drop.factors[0].root == 6);

    const FiberBehavior unitdrop = fiber_behavior(parse_poly("3*T^2+1"), Prime(3));
    CHECK(unitdrop.verdict == FiberVerdict::Split);
    CHECK(unitdrop.factors.empty());
    CHECK(unitdrop.degree_drop == 2);

    const FiberBehavior cont = fiber_behavior(parse_poly("3*T^2+3"), Prime(3));
    CHECK(cont.verdict == FiberVerdict::ContainedInFiber);
    CHECK(cont.degree_drop == 2);

    CHECK_THROWS_AS(fiber_behavior(parse_poly("5"), Prime(3)), std::domain_error);

    // degree conservation: sum of deg * mult + drop = deg f
    for (unsigned long pv : {2UL, 3UL, 5UL}) {
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c) {
                const IntPoly f = IntPoly({c, b, 0, 2});
                const FiberBehavior fb = fiber_behavior(f, Prime(pv));
                if (fb.verdict == FiberVerdict::ContainedInFiber) continue;
                int total = 0;
                for (const auto& ff : fb.factors)
                    total += ff.factor.degree() * static_cast<int>(ff.multiplicity);
                CHECK(total + static_cast<int>(fb.degree_drop) == f.degree());
            }
    }
}

TEST_CASE("tangency at the desert prime") {
    for (unsigned long pv : {2UL, 3UL, 5UL, 7UL, 11UL}) {
        const Prime p(pv);
        const IntPoly f = parse_poly("T^2+" + std::to_string(pv));
        const FiberReport rep = zp_fiber_report(f, p);
        REQUIRE(rep.rows.size() == 1);
        const FiberBehavior& row = rep.rows[0];
        CAPTURE(pv);
        CHECK(row.verdict == FiberVerdict::Tangent);
        REQUIRE(row.factors.size() == 1);
        CHECK(row.factors[0].factor.to_string() == "T");
        CHECK(row.factors[0].multiplicity == 2);
        // generic fiber stays irreducible, by Eisenstein
        CHECK(rep.generic.verdict == QpVerdict::Irreducible);
        CHECK(rep.generic.certificate == "eisenstein");
    }
}

TEST_CASE("single prime report matches the frozen JSON contract") {
    const auto expected = nlohmann::ordered_json::parse(R"({
      "anchor": "T^2+1",
      "space": { "kind": "Zp", "p": 7 },
      "rows": [
        { "fiber": 7, "verdict": { "kind": "blip", "residue_order": 49 } }
      ],
      "generic": { "verdict": "irreducible", "certificate": "disc-nonsquare-deg2" }
    })");
    const FiberReport rep = zp_fiber_report(parse_poly("T^2+1"), Prime(7));
    CHECK(fiber_report_json(rep) == expected);
}

TEST_CASE("report JSON shapes for the other verdicts") {
    auto j = fiber_report_json(zp_fiber_report(parse_poly("T^2+3"), Prime(3)));
    CHECK(j["rows"][0]["verdict"]["kind"] == "tangent");
    CHECK(j["rows"][0]["verdict"]["factor"] == "T");
    CHECK(j["rows"][0]["verdict"]["multiplicity"] == 2);
    CHECK(j["generic"]["certificate"] == "eisenstein");

    j = fiber_report_json(zp_fiber_report(parse_poly("T"), Prime(3)));
    CHECK(j["rows"][0]["verdict"]["kind"] == "split");
    CHECK(j["rows"][0]["verdict"]["factors"][0]["root"] == 0);
    CHECK(j["generic"]["certificate"] == "degree-1");

    j = fiber_report_json(zp_fiber_report(parse_poly("3*T^2+3"), Prime(3)));
    CHECK(j["rows"][0]["verdict"]["kind"] == "contained-in-fiber");
    // the generic row strips the p-power content before deciding
    CHECK(j["generic"]["verdict"] == "irreducible");
    CHECK(j["generic"]["certificate"] == "disc-nonsquare-deg2");

    j = fiber_report_json(zp_fiber_report(parse_poly("7*T^2+T+1"), Prime(7)));
    CHECK(j["rows"][0]["degree_drop"] == 1);
}

TEST_CASE("global report over several primes") {
    const std::vector<Prime> ps{Prime(2), Prime(3), Prime(5), Prime(7)};
    const FiberReport rep = z_fiber_report(parse_poly("T^2+1"), ps);
    CHECK(rep.global);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.rows[0].verdict == FiberVerdict::Tangent);
    CHECK(rep.rows[1].verdict == FiberVerdict::Blip);
    CHECK(rep.rows[2].verdict == FiberVerdict::Split);
    CHECK(rep.rows[3].verdict == FiberVerdict::Blip);
    CHECK(rep.generic.verdict == QpVerdict::Irreducible);
    CHECK(rep.generic.certificate == "no-rational-root");

    const FiberReport e = z_fiber_report(parse_poly("T^4-2"), {Prime(3)});
    CHECK(e.generic.verdict == QpVerdict::Irreducible);
    CHECK(e.generic.certificate == "eisenstein");
    REQUIRE(e.generic.at_prime.has_value());
    CHECK(*e.generic.at_prime == 2);

    const FiberReport rr = z_fiber_report(parse_poly("T^2-1"), {Prime(3)});
    CHECK(rr.generic.verdict == QpVerdict::Reducible);
    CHECK(rr.generic.witness->kind == "rational-root");
    CHECK(rr.generic.witness->value == "-1");

    const FiberReport und = z_fiber_report(parse_poly("T^4+1"), {Prime(2)});
    CHECK(und.generic.verdict == QpVerdict::Undecided);

    const FiberReport lin = z_fiber_report(parse_poly("T-5"), {Prime(2)});
    CHECK(lin.generic.verdict == QpVerdict::Irreducible);
    CHECK(lin.generic.certificate == "degree-1");
}

TEST_CASE("ideal classification across the point taxonomy") {
    const Prime p3(3), p5(5), p7(7);

    // closed point (7, T^2+1): residue field F_49
    auto c = classify_ideal(p7, {parse_poly("T^2+1")}, true);
    CHECK(c.status == ClassifyStatus::PrimeIdeal);
    REQUIRE(c.point.has_value());
    CHECK(c.point->kind == PointKind::ClosedPoint);
    REQUIRE(c.residue.has_value());
    CHECK(c.residue->kind == ResidueKind::FiniteField);
    CHECK(c.residue->order == 49);
    CHECK(c.residue->degree == 2);

    // (3, T): residue field F_3
    c = classify_ideal(p3, {parse_poly("T")}, true);
    CHECK(c.status == ClassifyStatus::PrimeIdeal);
    CHECK(c.residue->order == 3);

    // (3, T^2+3) = (3, T^2): nilpotents
    c = classify_ideal(p3, {parse_poly("T^2+3")}, true);
    CHECK(c.status == ClassifyStatus::NotPrime);
    CHECK(c.residue->kind == ResidueKind::NonDomain);
    CHECK(c.residue->text == "T^2 (nilpotent T)");

    // (5, T^2+1): splits, zero divisors
    c = classify_ideal(p5, {parse_poly("T^2+1")}, true);
    CHECK(c.status == ClassifyStatus::NotPrime);
    CHECK(c.residue->text == "(T+2)(T+3) (zero divisors)");

    // horizontal prime (T^2+1) over Z_7
    c = classify_ideal(p7, {parse_poly("T^2+1")}, false);
    CHECK(c.status == ClassifyStatus::PrimeIdeal);
    CHECK(c.point->kind == PointKind::HorizontalPrime);
    CHECK(c.point->certificate == "disc-nonsquare-deg2");
    CHECK(c.residue->kind == ResidueKind::LocalFieldExtension);
    CHECK(c.residue->degree == 2);

    // (T^2+1) over Z_5 splits
    c = classify_ideal(p5, {parse_poly("T^2+1")}, false);
    CHECK(c.status == ClassifyStatus::NotPrime);

    // generic points
    c = classify_ideal(p3, {}, false);
    CHECK(c.status == ClassifyStatus::PrimeIdeal);
    CHECK(c.point->kind == PointKind::GenericPoint);
    CHECK(c.residue->text == "Q_p(T)");
    c = classify_ideal(p3, {}, true);
    CHECK(c.point->kind == PointKind::SpecialFiberGeneric);
    CHECK(c.residue->text == "F_p(T)");

    // constants
    c = classify_ideal(p3, {parse_poly("9")}, false);
    CHECK(c.status == ClassifyStatus::NotPrime);
    CHECK(c.residue->text == "p^2 (nilpotent p)");
    c = classify_ideal(p3, {parse_poly("3")}, false);
    CHECK(c.status == ClassifyStatus::PrimeIdeal);
    CHECK(c.point->kind == PointKind::SpecialFiberGeneric);
    c = classify_ideal(p3, {parse_poly("5")}, false);
    CHECK(c.status == ClassifyStatus::NotPrime); // 5 is a unit of Z_3

    // non-primitive generator
    c = classify_ideal(p3, {parse_poly("3*T+3")}, false);
    CHECK(c.status == ClassifyStatus::NotPrime);
    CHECK(c.residue->text == "p*(T+1) (zero divisors)");

    // (p, f) with f = 0 mod p collapses to (p)
    c = classify_ideal(p3, {parse_poly("3*T+3")}, true);
    CHECK(c.status == ClassifyStatus::PrimeIdeal);
    CHECK(c.point->kind == PointKind::SpecialFiberGeneric);
    CHECK(!c.note.empty());

    // undecided quartic
    c = classify_ideal(p3, {parse_poly("T^4+2")}, false);
    CHECK(c.status == ClassifyStatus::Undecided);
    CHECK(!c.note.empty());

    CHECK_THROWS_AS(classify_ideal(p3, {parse_poly("T"), parse_poly("T+1")}, false),
                    std::invalid_argument);
}

TEST_CASE("classification JSON carries the taxonomy") {
    const Prime p7(7);
    auto j = classify_json(classify_ideal(p7, {parse_poly("T^2+1")}, true));
    CHECK(j["status"] == "prime");
    CHECK(j["point"]["kind"] == "closed");
    CHECK(j["point"]["p"] == 7);
    CHECK(j["point"]["poly"] == "T^2+1");
    CHECK(j["residue"]["kind"] == "finite-field");
    CHECK(j["residue"]["order"] == 49);

    j = classify_json(classify_ideal(p7, {parse_poly("T^2+1")}, false));
    CHECK(j["point"]["kind"] == "horizontal");
    CHECK(j["point"]["generator"] == "T^2+1");
    CHECK(j["residue"]["kind"] == "local-field-extension");

    j = classify_json(classify_ideal(Prime(3), {parse_poly("T^4+2")}, false));
    CHECK(j["status"] == "undecided");
    CHECK(j.contains("note"));
}

TEST_CASE("residue orders are exact counts") {
    // |F_p[T]/(f)| = p^deg f: count residues directly for small cases
    for (unsigned long pv : {2UL, 3UL}) {
        const Prime p(pv);
        const FiberBehavior fb = fiber_behavior(parse_poly("T^2+1"), Prime(7));
        CHECK(fb.residue_order == 49);
        // brute count: polynomials of degree < 2 over F_7
        unsigned count = 0;
        for (unsigned a = 0; a < 7; ++a)
            for (unsigned b = 0; b < 7; ++b) ++count;
        CHECK(count == 49);
    }
}
