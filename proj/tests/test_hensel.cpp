#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include <gmpxx.h>

#include "padicspec/errors.hpp"
#include "padicspec/hensel.hpp"
#include "padicspec/parse.hpp"
#include "padicspec/poly.hpp"
#include "padicspec/prime.hpp"

using namespace padicspec;

namespace {

mpz_class zpow(unsigned long p, unsigned n) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, n);
    return m;
}

mpz_class eval_mod(const IntPoly& f, const mpz_class& x, const mpz_class& m) {
    mpz_class acc = 0;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * x + f.coeff(static_cast<std::size_t>(i));
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

} // namespace

TEST_CASE("certify checks both hypotheses") {
    const Prime p3(3);
    const ZpPoly f = to_zp(parse_poly("T^2-13"), p3, 8);

    const HenselCertificate good = certify(f, PadicInt(p3, 8, 1));
    CHECK(good.v_f == Valuation::finite(1)); // f(1) = -12 = -3*4
    CHECK(good.v_fprime == Valuation::finite(0));
    CHECK(good.strong_ok);
    CHECK(good.weak_ok);

    const HenselCertificate bad = certify(f, PadicInt(p3, 8, 3));
    CHECK(bad.v_f == Valuation::finite(0)); // f(3) = -4, a unit
    CHECK(bad.v_fprime == Valuation::finite(1));
    CHECK(!bad.strong_ok);
    CHECK(!bad.weak_ok);

    // f'(a) = 0 at precision: e indeterminate, refused outright
    CHECK_THROWS_AS(certify(f, PadicInt(p3, 8, 0)), PrecisionError);

    // f(seed) = 0 at precision with f' a unit: v_f records infinity
    const ZpPoly lin = to_zp(parse_poly("T-3"), p3, 4);
    const HenselCertificate exact = certify(lin, PadicInt(p3, 4, 3));
    CHECK(exact.v_f.is_infinite());
    CHECK(exact.v_fprime == Valuation::finite(0));
    CHECK(exact.strong_ok);
    CHECK(exact.working_precision == 4);
}

TEST_CASE("certify refuses indeterminate hypotheses") {
    const Prime p3(3);
    // f'(a) = 0 at precision: e indeterminate
    const ZpPoly sq = to_zp(parse_poly("T^2"), p3, 4);
    CHECK_THROWS_AS(certify(sq, PadicInt(p3, 4, 0)), PrecisionError);

    // f(a) = 0 at working precision W <= 2e: strong hypothesis undecidable
    const ZpPoly g = to_zp(parse_poly("3*T-3"), p3, 2);
    CHECK_THROWS_AS(certify(g, PadicInt(p3, 2, 1)), PrecisionError);

    // same f at higher precision decides it
    const ZpPoly g4 = to_zp(parse_poly("3*T-3"), p3, 4);
    const HenselCertificate c = certify(g4, PadicInt(p3, 4, 1));
    CHECK(c.v_f.is_infinite());
    CHECK(c.v_fprime == Valuation::finite(1));
    CHECK(c.strong_ok); // W = 4 > 2
}

TEST_CASE("lift reproduces the frozen example and converges quadratically") {
    const Prime p3(3);
    const IntPoly f = parse_poly("T^2-13");

    const LiftedRoot r3 = lift(f, p3, 1, 3);
    CHECK(r3.alpha.residue() == 16);
    CHECK(r3.alpha.precision() == 3);
    CHECK(r3.kind == RootKind::Certified);
    // |alpha - seed| = |f(a)/f'(a)|: v = 1 - 0
    CHECK(r3.distance_valuation == Valuation::finite(1));
    CHECK(r3.fprime_valuation == Valuation::finite(0));

    const LiftedRoot r50 = lift(f, p3, 1, 50);
    const mpz_class m50 = zpow(3, 50);
    CHECK(r50.alpha.precision() == 50);
    mpz_class sq;
    mpz_powm_ui(sq.get_mpz_t(), r50.alpha.residue().get_mpz_t(), 2, m50.get_mpz_t());
    mpz_class thirteen;
    mpz_mod(thirteen.get_mpz_t(), mpz_class(13).get_mpz_t(), m50.get_mpz_t());
    CHECK(sq == thirteen);
    CHECK(r50.alpha.residue() % 3 == 1);

    // the two agree where both are defined
    CHECK(r50.alpha.truncate(3) == 16);
}

TEST_CASE("lift rejects weak seeds with the failed certificate attached") {
    const Prime p3(3);
    const IntPoly f = parse_poly("T^2-13");
    try {
        lift(f, p3, 3, 5); // f(3) = -4 is a unit: no convergence ball
        FAIL("expected HenselHypothesisError");
    } catch (const HenselHypothesisError& e) {
        CHECK(!e.certificate().strong_ok);
        CHECK(e.certificate().v_f == Valuation::finite(0));
    }
}

TEST_CASE("lift handles positive f' valuation") {
    const Prime p2(2);
    // f = T^2 - 17: f'(x) = 2x has e = 1 at odd seeds; strong needs v(f(a)) >= 3
    const IntPoly f = parse_poly("T^2-17");
    const LiftedRoot r = lift(f, p2, 1, 20); // f(1) = -16, v = 4 > 2
    const mpz_class m = zpow(2, 20);
    CHECK(eval_mod(f, r.alpha.residue(), m) == 0);
    CHECK(r.alpha.residue() % 2 == 1);
    // alpha is pinned only mod 2^(target), seed ball is wider: v(alpha-seed) = 4 - 1
    CHECK(r.distance_valuation == Valuation::finite(3));
}

TEST_CASE("roots_in_zp finds exactly the right residues") {
    const Prime p3(3), p5(5);

    const auto rs = roots_in_zp(parse_poly("T^2-13"), p3, 5);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].alpha.residue() == 16);
    CHECK(rs[1].alpha.residue() == 227);
    CHECK(rs[0].kind == RootKind::Certified);
    CHECK(rs[1].kind == RootKind::Certified);
    // the two roots are negatives of each other
    CHECK((rs[0].alpha + rs[1].alpha).residue() == 0);

    const auto cube = roots_in_zp(parse_poly("T^3-T"), p5, 6);
    REQUIRE(cube.size() == 3);
    std::set<mpz_class> mod5;
    for (const auto& r : cube) {
        mod5.insert(r.alpha.residue() % 5);
        CHECK(r.kind == RootKind::Certified);
    }
    CHECK(mod5 == std::set<mpz_class>{0, 1, 4});

    CHECK(roots_in_zp(parse_poly("T^2+1"), p3, 5).empty());
    CHECK(roots_in_zp(parse_poly("T^2-3"), p3, 5).empty()); // v(root) would be 1/2
}

TEST_CASE("integer content is stripped before root search") {
    const Prime p3(3);
    const auto rs = roots_in_zp(parse_poly("3*T^2-39"), p3, 5);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].alpha.residue() == 16);
}

TEST_CASE("at-precision roots are reported, never refined") {
    const Prime p3(3);
    // x^2 = 0 mod 81 has solutions exactly at v(x) >= 2: nine balls mod 81
    const auto rs = roots_in_zp(parse_poly("T^2"), p3, 4, 4);
    CHECK(!rs.empty());
    for (const auto& r : rs) {
        CHECK(r.kind == RootKind::ExactAtPrecision);
        mpz_class sq = r.alpha.residue() * r.alpha.residue();
        mpz_class m;
        mpz_mod(m.get_mpz_t(), sq.get_mpz_t(), zpow(3, 4).get_mpz_t());
        CHECK(m == 0);
        CHECK(r.alpha.residue() % 9 == 0);
    }
    CHECK(rs.size() == 9);
}

TEST_CASE("roots agree with brute force on a grid") {
    // Bidirectional ball cover against exhaustive solutions mod p^4.
    for (unsigned long pv : {2UL, 3UL}) {
        const Prime p(pv);
        const mpz_class m4 = zpow(pv, 4);
        for (int b = -3; b <= 3; ++b) {
            for (int c = -3; c <= 3; ++c) {
                const IntPoly f = parse_poly("T^2") + IntPoly({c, b});
                CAPTURE(pv);
                CAPTURE(f.to_string());
                std::vector<mpz_class> brute;
                for (mpz_class x = 0; x < m4; ++x)
                    if (eval_mod(f, x, m4) == 0) brute.push_back(x);
                const auto rs = roots_in_zp(f, p, 4, 4);
                for (const auto& r : rs) {
                    const unsigned k = std::min(4u, r.alpha.precision());
                    const mpz_class mk = zpow(pv, k);
                    bool hit = false;
                    for (const auto& x : brute)
                        if ((x - r.alpha.residue()) % mk == 0) hit = true;
                    CHECK(hit);
                }
                for (const auto& x : brute) {
                    bool covered = false;
                    for (const auto& r : rs) {
                        const unsigned k = std::min(4u, r.alpha.precision());
                        const mpz_class mk = zpow(pv, k);
                        if ((x - r.alpha.residue()) % mk == 0) covered = true;
                    }
                    CHECK(covered);
                }
            }
        }
    }
}

TEST_CASE("seed caps are enforced") {
    const Prime p101(101);
    const ZpPoly f = to_zp(parse_poly("T^2-2"), p101, 4);
    CHECK_THROWS_AS(roots_in_zp(f, 4), SizeError); // 101^4 seeds > 10^6
    CHECK_NOTHROW(roots_in_zp(f, 2));
}
