#include "padicspec/int_poly_tools.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicspec/errors.hpp"
#include "padicspec/padic_int.hpp"

namespace padicspec {

namespace {

constexpr std::size_t kMaxDivisors = 100000;

/// Fraction-free Gaussian elimination (Bareiss); exact over Z.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Trial division then a primality check on the cofactor. Throws SizeError
/// when a composite cofactor resists both.
std::vector<std::pair<mpz_class, unsigned>> factor_mpz(mpz_class n) {
    if (n < 0) n = -n;
    if (n <= 1) return {};
    std::vector<std::pair<mpz_class, unsigned>> out;
    auto strip = [&](const mpz_class& q) {
        if (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
            unsigned e = static_cast<unsigned>(
                mpz_remove(n.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
            out.emplace_back(q, e);
        }
    };
    strip(mpz_class(2));
    for (unsigned long q = 3; q <= 1000000 && n > 1; q += 2) {
        if (mpz_class(q) * q > n) break;
        strip(mpz_class(q));
    }
    if (n > 1) {
        bool prime;
        if (n.fits_ulong_p()) {
            prime = is_prime_u64(n.get_ui());
        } else {
            prime = mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
        }
        if (!prime) throw SizeError("cannot factor coefficient within bounds");
        out.emplace_back(n, 1);
    }
    return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [q, e] : factor_mpz(n)) {
        std::size_t base = divs.size();
        if (base * (e + 1) > kMaxDivisors)
            throw SizeError("divisor enumeration exceeds bound");
        mpz_class qk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            qk *= q;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * qk);
        }
    }
    return divs;
}

} // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree();
    const int n = g.degree();
    if (m < 0 || n < 0) return (m < 0 && n < 0) ? mpz_class(1) : mpz_class(0);
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }

    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, mpz_class(0)));
    // n shifted rows of f's coefficients (descending), then m rows of g's.
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                f.coeff(static_cast<std::size_t>(m - j));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] =
                g.coeff(static_cast<std::size_t>(n - j));
    return det_bareiss(std::move(s));
}

mpz_class discriminant(const IntPoly& f) {
    const int m = f.degree();
    if (m < 1) throw std::domain_error("discriminant needs degree >= 1");
    mpz_class r = resultant(f, f.derivative());
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((static_cast<unsigned long>(m) * (static_cast<unsigned long>(m) - 1) / 2) % 2 == 1)
        d = -d;
    return d;
}

std::vector<mpq_class> rational_roots(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
    std::vector<mpq_class> roots;

    std::vector<mpz_class> c = f.coeffs();
    std::size_t shift = 0;
    while (shift < c.size() && c[shift] == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    IntPoly g(c);
    if (g.degree() >= 1) {
        for (const mpz_class& r : positive_divisors(g.coeff(0))) {
            for (const mpz_class& s : positive_divisors(g.leading())) {
                mpq_class q(r, s);
                q.canonicalize();
                if (g.eval(q) == 0) roots.push_back(q);
                q = -q;
                if (g.eval(q) == 0) roots.push_back(q);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Prime> eisenstein_candidate_primes(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) return {};
    mpz_class g = 0;
    for (int i = 0; i < n; ++i) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.coeff(static_cast<std::size_t>(i)).get_mpz_t());
    }
    if (g <= 1) return {};
    std::vector<Prime> out;
    for (const auto& [q, e] : factor_mpz(g)) {
        (void)e;
        if (q.fits_ulong_p() && is_prime_u64(q.get_ui())) out.emplace_back(q.get_ui());
    }
    return out;
}

} // namespace padicspec
