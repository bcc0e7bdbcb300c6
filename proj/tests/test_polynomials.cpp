#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "padicspec/errors.hpp"
#include "padicspec/fp_factor.hpp"
#include "padicspec/int_poly_tools.hpp"
#include "padicspec/parse.hpp"
#include "padicspec/poly.hpp"
#include "padicspec/prime.hpp"

using namespace padicspec;

namespace {

/// Independent brute-force irreducibility over F_p: no monic divisor of
/// degree 1..deg/2. Used as the oracle against the Frobenius test.
bool brute_irreducible(const FpPoly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    const unsigned long p = f.prime().value();
    for (int e = 1; e <= d / 2; ++e) {
        std::vector<mpz_class> c(static_cast<std::size_t>(e) + 1, 0);
        c.back() = 1;
        unsigned long total = 1;
        for (int i = 0; i < e; ++i) total *= p;
        for (unsigned long code = 0; code < total; ++code) {
            unsigned long rest = code;
            for (int i = 0; i < e; ++i) {
                c[static_cast<std::size_t>(i)] = rest % p;
                rest /= p;
            }
            if (f.divisible_by(FpPoly(f.prime(), c))) return false;
        }
    }
    return true;
}

int mobius(int n) {
    int m = 1;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

long necklace_count(unsigned long p, int d) {
    long total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        long pe = 1;
        for (int i = 0; i < d / e; ++i) pe *= static_cast<long>(p);
        total += mobius(e) * pe;
    }
    return total / d;
}

FpPoly monic_from_code(const Prime& p, int deg, unsigned long code) {
    std::vector<mpz_class> c(static_cast<std::size_t>(deg) + 1, 0);
    c.back() = 1;
    for (int i = 0; i < deg; ++i) {
        c[static_cast<std::size_t>(i)] = code % p.value();
        code /= p.value();
    }
    return FpPoly(p, c);
}

} // namespace

TEST_CASE("parser round trips and canonical rendering") {
    for (const char* s : {"T^2-13", "2*T^3+T-5", "T", "0", "T^2+2*T+2", "-T^2+3*T",
                          "T^10-1", "7", "-7", "T^4+2"}) {
        const IntPoly f = parse_poly(s);
        CHECK(parse_poly(f.to_string()) == f);
    }
    CHECK(parse_poly("T^2-13").to_string() == "T^2-13");
    CHECK(parse_poly("2*T^3+T-5").to_string() == "2*T^3+T-5");
    CHECK(parse_poly("-T^2+3*T").to_string() == "-T^2+3*T");
    CHECK(parse_poly("0").to_string() == "0");
    CHECK(parse_poly("T+T").to_string() == "2*T");
    CHECK(parse_poly(" T ^ 2 + 1 ").to_string() == "T^2+1");
    CHECK(parse_poly("3T").to_string() == "3*T"); // implicit multiplication
    CHECK(parse_poly("T^3-T^3").to_string() == "0");
    CHECK(parse_poly("5-T+2*T").to_string() == "T+5");

    CHECK(parse_poly("T^2-13") == IntPoly({-13, 0, 1}));
    CHECK(parse_poly("2*T^3+T-5") == IntPoly({-5, 1, 0, 2}));

    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("T^"), ParseError);
    CHECK_THROWS_AS(parse_poly("x+1"), ParseError);
    CHECK_THROWS_AS(parse_poly("T++1"), ParseError);
    CHECK_THROWS_AS(parse_poly("T^-2"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/2*T"), ParseError);
    try {
        parse_poly("T^2+&3");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("integer polynomial arithmetic") {
    const IntPoly f = parse_poly("T^2-13"), g = parse_poly("T+3");
    CHECK(f.degree() == 2);
    CHECK(IntPoly().degree() == -1);
    CHECK((f + g) == parse_poly("T^2+T-10"));
    CHECK((f - f).is_zero());
    CHECK((f * g) == parse_poly("T^3+3*T^2-13*T-39"));
    CHECK((-f) == parse_poly("-T^2+13"));
    CHECK(f.eval(mpz_class(4)) == 3);
    CHECK(f.eval(mpq_class(1, 2)) == mpq_class(-51, 4));
    CHECK(f.derivative() == parse_poly("2*T"));
    CHECK(f.coeff(7) == 0);
}

TEST_CASE("reduction mod p and F_p division") {
    const Prime p5(5);
    const FpPoly f = reduce_mod_p(parse_poly("T^2+1"), p5);
    CHECK(f.to_string() == "T^2+1");
    CHECK(reduce_mod_p(parse_poly("5*T^2+6*T-1"), p5).to_string() == "T+4");
    CHECK(reduce_mod_p(parse_poly("5*T+10"), p5).is_zero());

    const FpPoly g(p5, {2, 1}); // T+2
    const auto [q, r] = f.divmod(g);
    CHECK(r.degree() <= 0);
    CHECK((q * g + r) == f);
    CHECK(f.eval(3) == 0); // -2 is a root of T^2+1 mod 5
    CHECK(f.divisible_by(g));

    const FpPoly h(p5, {0, 3}); // 3T
    CHECK(h.monic().to_string() == "T");
    CHECK_THROWS_AS(f.divmod(FpPoly(p5)), std::domain_error);

    // order: degree first, then coefficient list from the constant term
    CHECK(FpPoly::order_less(FpPoly(p5, {4}), FpPoly(p5, {0, 1})));
    CHECK(FpPoly::order_less(FpPoly(p5, {2, 1}), FpPoly(p5, {3, 1})));
    CHECK(!FpPoly::order_less(FpPoly(p5, {3, 1}), FpPoly(p5, {2, 1})));
}

TEST_CASE("Frobenius irreducibility agrees with brute force") {
    for (unsigned long pv : {2UL, 3UL, 5UL}) {
        const Prime p(pv);
        for (int d = 1; d <= 3; ++d) {
            unsigned long total = 1;
            for (int i = 0; i < d; ++i) total *= pv;
            for (unsigned long code = 0; code < total; ++code) {
                const FpPoly f = monic_from_code(p, d, code);
                CAPTURE(pv);
                CAPTURE(f.to_string());
                CHECK(fp_is_irreducible(f) == brute_irreducible(f));
            }
        }
    }
    // constants are not irreducible
    CHECK(!fp_is_irreducible(FpPoly(Prime(5), {3})));
    CHECK(!fp_is_irreducible(FpPoly(Prime(5))));
}

TEST_CASE("factorization round trips exhaustively") {
    for (unsigned long pv : {2UL, 3UL}) {
        const Prime p(pv);
        for (int d = 1; d <= 4; ++d) {
            unsigned long total = 1;
            for (int i = 0; i < d; ++i) total *= pv;
            for (unsigned long code = 0; code < total; ++code) {
                const FpPoly f = monic_from_code(p, d, code);
                const FpFactorization fac = fp_factor(f);
                FpPoly prod(p, {fac.unit});
                for (const auto& [g, m] : fac.factors) {
                    CHECK(g.is_monic());
                    CHECK(fp_is_irreducible(g));
                    for (unsigned i = 0; i < m; ++i) prod = prod * g;
                }
                CAPTURE(f.to_string());
                CHECK(prod == f);
                CHECK(std::is_sorted(fac.factors.begin(), fac.factors.end(),
                                     [](const auto& a, const auto& b) {
                                         return FpPoly::order_less(a.first, b.first);
                                     }));
            }
        }
    }
    // non-monic input keeps its unit
    const FpFactorization fac = fp_factor(FpPoly(Prime(5), {1, 0, 3}));
    CHECK(fac.unit == 3);
}

TEST_CASE("irreducible enumeration matches the necklace formula") {
    for (unsigned long pv : {2UL, 3UL, 5UL}) {
        const Prime p(pv);
        for (int d = 1; d <= 4; ++d) {
            const auto all = enumerate_irreducibles(p, static_cast<unsigned>(d));
            CHECK(static_cast<long>(all.size()) == necklace_count(pv, d));
            CHECK(std::is_sorted(all.begin(), all.end(), FpPoly::order_less));
            for (const auto& f : all) CHECK(fp_is_irreducible(f));
        }
    }
    // frozen slices
    const auto q2 = enumerate_irreducibles(Prime(2), 2);
    REQUIRE(q2.size() == 1);
    CHECK(q2[0].to_string() == "T^2+T+1");
    CHECK(enumerate_irreducibles(Prime(2), 4).size() == 3);
    CHECK(enumerate_irreducibles(Prime(3), 3).size() == 8);

    CHECK_THROWS_AS(enumerate_irreducibles(Prime(101), 3), SizeError);
}

TEST_CASE("resultants and discriminants") {
    CHECK(discriminant(parse_poly("T^2-13")) == 52);
    CHECK(discriminant(parse_poly("T^2+1")) == -4);
    CHECK(discriminant(parse_poly("T^3+T+1")) == -31);
    // (T-1)(T-2)(T-3): squared root differences 1*4*1
    CHECK(discriminant(parse_poly("T^3-6*T^2+11*T-6")) == 4);
    CHECK(discriminant(parse_poly("T^2-2*T+1")) == 0);
    CHECK(discriminant(parse_poly("2*T^2+3*T+1")) == 1);
    CHECK_THROWS_AS(discriminant(parse_poly("7")), std::domain_error);

    // res(f, g) = lc(g)^deg f * prod f(roots of g); multiplicativity spot checks
    const IntPoly a = parse_poly("T^2+1"), b = parse_poly("T-2"), c = parse_poly("T+3");
    CHECK(resultant(a, b) == 5);      // a(2)
    CHECK(resultant(a, c) == 10);     // a(-3)
    CHECK(resultant(a, b * c) == 50); // multiplicative in the second slot
    CHECK(resultant(b, a) == 5);      // degree-2 swap keeps the sign here
}

TEST_CASE("rational root enumeration is complete") {
    auto roots = rational_roots(parse_poly("T^2-1"));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == -1);
    CHECK(roots[1] == 1);

    roots = rational_roots(parse_poly("2*T^2-T"));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == 0);
    CHECK(roots[1] == mpq_class(1, 2));

    CHECK(rational_roots(parse_poly("T^2+1")).empty());
    CHECK(rational_roots(parse_poly("T^2-2")).empty());

    // (T-1)(2*T+1)(3*T+2)
    roots = rational_roots(parse_poly("6*T^3+T^2-5*T-2"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == mpq_class(-2, 3));
    CHECK(roots[1] == mpq_class(-1, 2));
    CHECK(roots[2] == 1);
}

TEST_CASE("eisenstein certificates") {
    const Prime p2(2), p3(3);
    CHECK(eisenstein(parse_poly("T^2-3"), p3));
    CHECK(eisenstein(parse_poly("T^4+2"), p2));
    CHECK(eisenstein(parse_poly("T^2+2"), p2));
    CHECK(!eisenstein(parse_poly("T^2+4"), p2)); // a0 fails mod p^2
    CHECK(!eisenstein(parse_poly("T^2+1"), p2));
    CHECK(!eisenstein(parse_poly("2*T^2+2"), p2)); // leading coefficient divisible

    auto cand = eisenstein_candidate_primes(parse_poly("T^4+2"));
    REQUIRE(cand.size() == 1);
    CHECK(cand[0].value() == 2);
    CHECK(eisenstein_candidate_primes(parse_poly("T^4+1")).empty());
    cand = eisenstein_candidate_primes(parse_poly("T^3+6*T+6"));
    REQUIRE(cand.size() == 2);
    CHECK(cand[0].value() == 2);
    CHECK(cand[1].value() == 3);

    // precision semantics over Z_p: a0 = 0 at N=1 cannot decide p || a0
    const ZpPoly f1 = to_zp(parse_poly("T^2+3"), p3, 1);
    CHECK_THROWS_AS(eisenstein(f1), PrecisionError);
    const ZpPoly f2 = to_zp(parse_poly("T^2+3"), p3, 2);
    CHECK(eisenstein(f2));
    const ZpPoly f3 = to_zp(parse_poly("T^2+9"), p3, 2);
    CHECK(!eisenstein(f3));
}

TEST_CASE("Z_p polynomials evaluate coherently") {
    const Prime p3(3);
    const ZpPoly f = to_zp(parse_poly("T^2-13"), p3, 4);
    CHECK(f.precision() == 4);
    CHECK(f.degree() == 2);
    const PadicInt a(p3, 4, 16);
    CHECK(f.eval(a).residue() == (16 * 16 - 13) % 81);
    CHECK(f.derivative().degree() == 1);
    CHECK(reduce_mod_p(f).to_string() == "T^2+2");
    // formal degree: unknown leading digits are kept, not trimmed
    const ZpPoly g = to_zp(parse_poly("3*T^2+T"), p3, 1);
    CHECK(g.degree() == 2);
    CHECK(reduce_mod_p(g).degree() == 1);
    CHECK(is_primitive(g));
    CHECK(is_primitive_at(parse_poly("T^2+3"), p3));
    CHECK(!is_primitive_at(parse_poly("3*T^2+9"), p3));
}
