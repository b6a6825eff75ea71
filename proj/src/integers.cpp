#include "qflab/integers.hpp"

#include <algorithm>
#include <stdexcept>

namespace qflab {

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Int> perfect_square_root(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    return isqrt(n);
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Int positive_mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::vector<Int> divisors(const Int& n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n) {
    if (n <= 0) throw std::invalid_argument("factor_integer: n must be positive");
    std::vector<std::pair<Int, unsigned>> out;
    Int m = n;
    for (Int p = 2; p * p <= m; p == 2 ? ++p : p += 2) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    Int m = abs(n);
    for (auto& [p, e] : factor_integer(m))
        if (e > 1) return false;
    return true;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return r;
}

std::optional<Int> mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        return std::nullopt;
    return r;
}

std::optional<Int> sqrt_mod_p(const Int& a, const Int& p) {
    Int r = positive_mod(a, p);
    if (r == 0) return Int(0);
    if (mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
    auto powm = [&](const Int& base, const Int& exp) {
        Int out;
        mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        return out;
    };
    if (positive_mod(p, 4) == 3) return powm(r, (p + 1) / 4);
    // Tonelli-Shanks: write p-1 = q * 2^s with q odd.
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int m = s, c = powm(z, q), t = powm(r, q), res = powm(r, (q + 1) / 2);
    while (t != 1) {
        Int tt = t;
        Int i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        res = res * b % p;
    }
    return res;
}

std::optional<std::pair<Int, Int>> crt_pair(const Int& r1, const Int& m1,
                                            const Int& r2, const Int& m2) {
    auto [g, s, t] = ext_gcd(m1, m2);
    if ((r2 - r1) % g != 0) return std::nullopt;
    Int l = m1 / g * m2;
    // x = r1 + m1 * s * (r2 - r1) / g solves both congruences
    Int x = r1 + m1 * s % l * ((r2 - r1) / g);
    return std::make_pair(positive_mod(x, l), l);
}

}  // namespace qflab
