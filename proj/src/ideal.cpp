#include "qflab/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qflab/errors.hpp"

namespace qflab {

namespace {

void require_maximal(const QuadraticOrder& O, const char* who) {
    if (!O.is_maximal())
        throw ValidationError(std::string(who) + ": ideals are represented over the maximal order only");
}

// N(b + c*omega) for the maximal order.
Int gen_norm(const QuadraticOrder& O, const Int& b, const Int& c) {
    return b * b + O.trace_tau * b * c + O.norm_tau * c * c;
}

}  // namespace

IntegralIdeal ideal_from_lattice(const QuadraticOrder& O, const Lattice& L) {
    require_maximal(O, "ideal_from_lattice");
    if (L.a <= 0 || L.c <= 0 || L.b < 0 || L.b >= L.a)
        throw ValidationError("ideal_from_lattice: not an HNF triple");
    if (L.a % L.c != 0 || L.b % L.c != 0)
        throw ValidationError("ideal_from_lattice: c must divide a and b");
    if (gen_norm(O, L.b, L.c) % (L.a * L.c) != 0)
        throw ValidationError("ideal_from_lattice: module is not closed under multiplication by omega");
    return {O, L};
}

IntegralIdeal ideal_from_generators(const QuadraticOrder& O,
                                    const std::vector<OrderElement>& gens) {
    require_maximal(O, "ideal_from_generators");
    std::vector<Vec2> module;
    for (const auto& g : gens) {
        if (g.order != O)
            throw ValidationError("ideal_from_generators: generator over a different ring");
        if (g.is_zero()) continue;
        module.emplace_back(g.a, g.b);
        // g * omega, using omega^2 = trace*omega - norm
        module.emplace_back(-g.b * O.norm_tau, g.a + g.b * O.trace_tau);
    }
    if (module.empty())
        throw ValidationError("ideal_from_generators: need at least one nonzero generator");
    return ideal_from_lattice(O, hnf_from_generators(module));
}

IntegralIdeal principal_ideal(const OrderElement& g) {
    return ideal_from_generators(g.order, {g});
}

IntegralIdeal unit_ideal(const QuadraticOrder& O) {
    require_maximal(O, "unit_ideal");
    return {O, Lattice{1, 0, 1}};
}

IntegralIdeal ideal_mul(const IntegralIdeal& I, const IntegralIdeal& J) {
    if (I.order != J.order) throw ValidationError("ideal_mul: mismatched parents");
    const QuadraticOrder& O = I.order;
    // Pairwise products of the two HNF bases.
    Int t = O.trace_tau, n = O.norm_tau;
    std::vector<Vec2> gens = {
        {I.a() * J.a(), 0},
        {I.a() * J.b(), I.a() * J.c()},
        {I.b() * J.a(), I.c() * J.a()},
        // (b1 + c1*w)(b2 + c2*w)
        {I.b() * J.b() - I.c() * J.c() * n,
         I.b() * J.c() + I.c() * J.b() + I.c() * J.c() * t},
    };
    return ideal_from_lattice(O, hnf_from_generators(gens));
}

IntegralIdeal ideal_pow(const IntegralIdeal& I, unsigned k) {
    IntegralIdeal acc = unit_ideal(I.order);
    for (unsigned i = 0; i < k; ++i) acc = ideal_mul(acc, I);
    return acc;
}

IntegralIdeal ideal_add(const IntegralIdeal& I, const IntegralIdeal& J) {
    if (I.order != J.order) throw ValidationError("ideal_add: mismatched parents");
    std::vector<Vec2> gens = {{I.a(), 0}, {I.b(), I.c()}, {J.a(), 0}, {J.b(), J.c()}};
    return ideal_from_lattice(I.order, hnf_from_generators(gens));
}

IntegralIdeal conj_ideal(const IntegralIdeal& I) {
    // omega -> trace - omega maps (x, y) to (x + t*y, -y).
    Int t = I.order.trace_tau;
    std::vector<Vec2> gens = {{I.a(), 0}, {I.b() + t * I.c(), -I.c()}};
    return ideal_from_lattice(I.order, hnf_from_generators(gens));
}

bool comaximal(const IntegralIdeal& I, const IntegralIdeal& J) {
    return ideal_add(I, J).is_unit();
}

bool ideal_contains(const IntegralIdeal& I, const OrderElement& x) {
    if (x.order != I.order)
        throw ValidationError("ideal_contains: element over a different ring");
    return lattice_contains(I.lat, x.a, x.b);
}

OrderElement reduce_mod_ideal(const IntegralIdeal& I, const OrderElement& x) {
    auto [a, b] = lattice_reduce(I.lat, x.a, x.b);
    return {I.order, a, b};
}

PrimeSplitting primes_above(const QuadraticOrder& O, const Int& p) {
    require_maximal(O, "primes_above");
    if (!is_prime(p)) throw ValidationError("primes_above: p must be a rational prime");
    Int t = O.trace_tau, n = O.norm_tau;

    // Roots of x^2 - t*x + n mod p.
    std::vector<Int> roots;
    if (p == 2) {
        for (Int r = 0; r < 2; ++r)
            if (positive_mod(r * r - t * r + n, p) == 0) roots.push_back(r);
    } else {
        Int D = positive_mod(t * t - 4 * n, p);  // = dK mod p
        if (D == 0) {
            roots.push_back(positive_mod(t * *mod_inverse(2, p), p));
        } else if (auto s = sqrt_mod_p(D, p)) {
            Int half = *mod_inverse(2, p);
            roots.push_back(positive_mod((t + *s) * half, p));
            roots.push_back(positive_mod((t - *s) * half, p));
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    PrimeSplitting out;
    out.p = p;
    auto prime_at = [&](const Int& r) {
        return ideal_from_generators(O, {from_int(O, p), OrderElement(O, -r, 1)});
    };
    if (roots.empty()) {
        out.type = SplitType::inert;
        out.primes.push_back(ideal_from_lattice(O, Lattice{p, 0, p}));
    } else if (roots.size() == 1) {
        out.type = SplitType::ramified;
        out.primes.push_back(prime_at(roots[0]));
    } else {
        out.type = SplitType::split;
        out.primes.push_back(prime_at(roots[0]));
        out.primes.push_back(prime_at(roots[1]));
        std::sort(out.primes.begin(), out.primes.end(),
                  [](const IntegralIdeal& x, const IntegralIdeal& y) { return x.lat < y.lat; });
    }
    return out;
}

bool is_prime_ideal(const IntegralIdeal& I) {
    Int n = I.norm();
    if (is_prime(n)) {
        auto sp = primes_above(I.order, n);
        for (const auto& P : sp.primes)
            if (P == I) return true;
        return false;
    }
    auto r = perfect_square_root(n);
    if (!r || !is_prime(*r)) return false;
    auto sp = primes_above(I.order, *r);
    return sp.type == SplitType::inert && sp.primes[0] == I;
}

namespace {

// Exact division J / P for a prime P dividing J.
IntegralIdeal divide_by_prime(const IntegralIdeal& J, const IntegralIdeal& P, const Int& p) {
    if (P.norm() == p * p) {
        // inert: J / (p) scales the HNF by 1/p
        return ideal_from_lattice(J.order, Lattice{J.a() / p, J.b() / p, J.c() / p});
    }
    // J * conj(P) = p * (J/P); divide the product generators by p.
    const QuadraticOrder& O = J.order;
    IntegralIdeal Pc = conj_ideal(P);
    Int t = O.trace_tau, n = O.norm_tau;
    std::vector<Vec2> gens = {
        {J.a() * Pc.a(), 0},
        {J.a() * Pc.b(), J.a() * Pc.c()},
        {J.b() * Pc.a(), J.c() * Pc.a()},
        {J.b() * Pc.b() - J.c() * Pc.c() * n,
         J.b() * Pc.c() + J.c() * Pc.b() + J.c() * Pc.c() * t},
    };
    for (auto& [x, y] : gens) {
        if (x % p != 0 || y % p != 0)
            throw Error("divide_by_prime: inexact division (P does not divide J)");
        x /= p;
        y /= p;
    }
    return ideal_from_lattice(O, hnf_from_generators(gens));
}

}  // namespace

bool PrimeFactorization::radical() const {
    for (const auto& [P, e] : factors)
        if (e > 1) return false;
    return true;
}

IntegralIdeal PrimeFactorization::product(const QuadraticOrder& O) const {
    IntegralIdeal acc = unit_ideal(O);
    for (const auto& [P, e] : factors) acc = ideal_mul(acc, ideal_pow(P, e));
    return acc;
}

PrimeFactorization factor_ideal(const IntegralIdeal& I) {
    PrimeFactorization out;
    for (const auto& pe : factor_integer(I.norm())) {
        const Int& p = pe.first;
        auto sp = primes_above(I.order, p);
        for (const auto& P : sp.primes) {
            unsigned v = 0;
            IntegralIdeal J = I;
            while (lattice_subset(J.lat, P.lat)) {
                J = divide_by_prime(J, P, p);
                ++v;
            }
            if (v > 0) out.factors.emplace_back(P, v);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) {
                  Int nx = x.first.norm(), ny = y.first.norm();
                  return std::tie(nx, x.first.lat) < std::tie(ny, y.first.lat);
              });
    if (!(out.product(I.order) == I))
        throw Error("factor_ideal: internal check failed, factors do not multiply back");
    return out;
}

std::optional<OrderElement> is_principal(const IntegralIdeal& I) {
    if (I.is_unit()) return from_int(I.order, 1);
    for (const auto& g : elements_of_norm(I.order, I.norm()))
        if (principal_ideal(g) == I) return canonical_associate(g);
    return std::nullopt;
}

std::vector<IntegralIdeal> ideals_of_norm(const QuadraticOrder& O, const Int& n) {
    require_maximal(O, "ideals_of_norm");
    if (n < 1) throw ValidationError("ideals_of_norm: n must be positive");
    std::vector<IntegralIdeal> out;
    for (Int c = 1; c * c <= n; ++c) {
        if (n % (c * c) != 0) continue;
        Int a = n / c;
        for (Int bq = 0; bq < a / c; ++bq) {
            Int b = c * bq;
            if (gen_norm(O, b, c) % n == 0)
                out.push_back(ideal_from_lattice(O, Lattice{a, b, c}));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IntegralIdeal& x, const IntegralIdeal& y) { return x.lat < y.lat; });
    return out;
}

std::string to_string(const IntegralIdeal& I) {
    std::ostringstream os;
    os << "<" << I.a() << ", " << to_radical_string(OrderElement(I.order, I.b(), I.c())) << ">";
    return os.str();
}

}  // namespace qflab
