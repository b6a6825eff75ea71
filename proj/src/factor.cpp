#include "qflab/factor.hpp"

#include <algorithm>

#include "qflab/class_group.hpp"
#include "qflab/errors.hpp"
#include "qflab/ideal.hpp"

namespace qflab {

std::string to_string(HfdVerdict v) {
    switch (v) {
        case HfdVerdict::certified_hfd: return "CERTIFIED_HFD";
        case HfdVerdict::hfd_up_to_bound: return "HFD_UP_TO_BOUND";
        case HfdVerdict::not_hfd: return "NOT_HFD";
    }
    return "?";
}

FactorContext::FactorContext(QuadraticOrder O, Int budget)
    : order_(std::move(O)), budget_(std::move(budget)) {}

void FactorContext::check_budget(const Int& n) const {
    if (n > budget_)
        throw BudgetExceededError("factorization search beyond configured norm budget", budget_);
}

const std::vector<OrderElement>& FactorContext::norm_elements(const Int& n) {
    auto it = elements_cache_.find(n);
    if (it == elements_cache_.end())
        it = elements_cache_.emplace(n, elements_of_norm(order_, n)).first;
    return it->second;
}

const std::vector<OrderElement>& FactorContext::canonical_elements_of_norm(const Int& n) {
    auto it = canonical_cache_.find(n);
    if (it != canonical_cache_.end()) return it->second;
    std::vector<OrderElement> reps;
    for (const auto& x : norm_elements(n)) {
        OrderElement c = canonical_associate(x);
        if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
    }
    std::sort(reps.begin(), reps.end(), element_less);
    return canonical_cache_.emplace(n, std::move(reps)).first->second;
}

const std::vector<OrderElement>& FactorContext::norm_irreducibles(const Int& n) {
    auto it = irreducible_cache_.find(n);
    if (it != irreducible_cache_.end()) return it->second;
    std::vector<OrderElement> irr;
    for (const auto& x : canonical_elements_of_norm(n))
        if (is_irreducible(x)) irr.push_back(x);
    return irreducible_cache_.emplace(n, std::move(irr)).first->second;
}

bool FactorContext::is_irreducible(const OrderElement& x) {
    if (x.is_zero()) throw ValidationError("is_irreducible: x must be nonzero");
    if (x.order != order_) throw ValidationError("is_irreducible: element of a different order");
    Int n = x.norm();
    if (n == 1) return false;  // units are not irreducible
    for (const auto& d : divisors(n)) {
        if (d == 1 || d == n) continue;
        for (const auto& y : canonical_elements_of_norm(d))
            if (divide_exact(x, y)) return false;
    }
    return true;
}

const std::set<unsigned>& FactorContext::length_set(const OrderElement& x) {
    if (x.is_zero() || x.is_unit())
        throw ValidationError("length_set: x must be a nonzero nonunit");
    if (x.order != order_) throw ValidationError("length_set: element of a different order");
    OrderElement cx = canonical_associate(x);
    Key key{cx.a, cx.b};
    auto it = length_cache_.find(key);
    if (it != length_cache_.end()) return it->second;

    Int n = cx.norm();
    check_budget(n);
    std::set<unsigned> lengths;
    bool has_proper_divisor = false;
    for (const auto& d : divisors(n)) {
        if (d == 1 || d == n) continue;
        for (const auto& pi : norm_irreducibles(d)) {
            auto q = divide_exact(cx, pi);
            if (!q) continue;
            has_proper_divisor = true;
            for (unsigned l : length_set(*q)) lengths.insert(l + 1);
        }
    }
    if (!has_proper_divisor) lengths.insert(1);  // cx is irreducible
    return length_cache_.emplace(key, std::move(lengths)).first->second;
}

unsigned FactorContext::unique_length(const OrderElement& x) {
    if (x.is_unit()) return 0;
    const auto& L = length_set(x);
    if (L.size() != 1)
        throw AmbiguousLengthError("unique_length: element has factorizations of distinct lengths (" +
                                   to_radical_string(x) + ")");
    return *L.begin();
}

std::vector<std::vector<OrderElement>> FactorContext::enumerate_factorizations(
    const OrderElement& x) {
    // x canonical, nonzero, nonunit. Multisets are built smallest factor
    // first, so each arises exactly once.
    Key key{x.a, x.b};
    auto it = factorization_cache_.find(key);
    if (it != factorization_cache_.end()) return it->second;

    Int n = x.norm();
    check_budget(n);
    std::vector<std::vector<OrderElement>> out;
    bool reducible = false;
    for (const auto& d : divisors(n)) {
        if (d == 1 || d == n) continue;
        for (const auto& pi : norm_irreducibles(d)) {
            auto q = divide_exact(x, pi);
            if (!q) continue;
            reducible = true;
            for (const auto& rest : enumerate_factorizations(canonical_associate(*q))) {
                if (element_less(rest.front(), pi)) continue;  // not the minimal factor
                std::vector<OrderElement> fac;
                fac.reserve(rest.size() + 1);
                fac.push_back(pi);
                fac.insert(fac.end(), rest.begin(), rest.end());
                out.push_back(std::move(fac));
            }
        }
    }
    if (!reducible) out.push_back({x});
    factorization_cache_.emplace(key, out);
    return out;
}

FactorizationSet FactorContext::factorizations(const OrderElement& x) {
    if (x.is_zero() || x.is_unit())
        throw ValidationError("factorizations: x must be a nonzero nonunit");
    if (x.order != order_) throw ValidationError("factorizations: element of a different order");
    FactorizationSet fs{x, enumerate_factorizations(canonical_associate(x)), {}};
    std::sort(fs.factorizations.begin(), fs.factorizations.end(),
              [](const auto& u, const auto& v) {
                  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                                      element_less);
              });
    std::set<unsigned> ls;
    for (const auto& f : fs.factorizations) ls.insert(static_cast<unsigned>(f.size()));
    fs.lengths.assign(ls.begin(), ls.end());
    return fs;
}

std::vector<OrderElement> FactorContext::irreducibles_up_to(const Int& bound) {
    if (bound < 2) throw ValidationError("irreducibles_up_to: bound must be >= 2");
    std::vector<OrderElement> out;
    for (Int n = 2; n <= bound; ++n)
        for (const auto& pi : norm_irreducibles(n)) out.push_back(pi);
    return out;
}

HfdWitness FactorContext::carlitz_witness() {
    // Class number > 2. Build an element with factorizations of lengths 2 and
    // k from a prime ideal class of order k > 2 when the group exponent
    // allows, else (exponent 2) of lengths 2 and 3 from three distinct
    // nontrivial classes.
    auto cg = class_group(order_);
    Int exponent = cg.invariants.empty() ? Int(1) : cg.invariants.back();

    auto verify = [&](HfdWitness w) {
        auto check = [&](const std::vector<OrderElement>& fac) {
            OrderElement prod = from_int(order_, 1);
            for (const auto& pi : fac) {
                if (!is_irreducible(pi)) throw Error("carlitz_witness: factor not irreducible");
                prod = prod * pi;
            }
            auto q = divide_exact(w.element, prod);
            if (!q || !q->is_unit())
                throw Error("carlitz_witness: factorization does not multiply back");
        };
        check(w.shorter);
        check(w.longer);
        if (w.shorter.size() == w.longer.size())
            throw Error("carlitz_witness: lengths not distinct");
        return w;
    };

    std::vector<IntegralIdeal> nonprincipal;  // distinct classes, exponent-2 path
    for (Int p = 2; p < 100000; p = p == 2 ? Int(3) : Int(p + 2)) {
        if (!is_prime(p)) continue;
        for (const auto& P : primes_above(order_, p).primes) {
            if (is_principal(P)) continue;
            if (exponent > 2) {
                unsigned k = 2;
                IntegralIdeal Pk = ideal_mul(P, P);
                std::optional<OrderElement> g;
                while (!(g = is_principal(Pk))) {
                    Pk = ideal_mul(Pk, P);
                    ++k;
                }
                if (k <= 2) continue;  // class of order 2
                HfdWitness w{from_int(order_, g->norm()), {}, {}};  // element = p^k
                w.shorter = {canonical_associate(*g), canonical_associate(g->conj())};
                std::sort(w.shorter.begin(), w.shorter.end(), element_less);
                w.longer.assign(k, from_int(order_, p));
                return verify(w);
            }
            // exponent 2: collect primes in pairwise distinct nontrivial classes
            bool same_class = false;
            for (const auto& Q : nonprincipal)
                if (is_principal(ideal_mul(P, conj_ideal(Q)))) same_class = true;
            if (same_class) continue;
            nonprincipal.push_back(P);
            if (nonprincipal.size() == 2) {
                IntegralIdeal PQ = ideal_mul(nonprincipal[0], nonprincipal[1]);
                // find a prime R in the class of PQ; with exponent 2 that
                // means P*Q*R is principal, generated by an irreducible
                for (Int r = 2; r < 100000; r = r == 2 ? Int(3) : Int(r + 2)) {
                    if (!is_prime(r)) continue;
                    for (const auto& R : primes_above(order_, r).primes) {
                        if (is_principal(R)) continue;
                        auto gen = is_principal(ideal_mul(PQ, R));
                        if (!gen) continue;
                        Int p0 = nonprincipal[0].norm(), q0 = nonprincipal[1].norm();
                        HfdWitness w{from_int(order_, p0 * q0 * r), {}, {}};
                        w.shorter = {canonical_associate(*gen), canonical_associate(gen->conj())};
                        std::sort(w.shorter.begin(), w.shorter.end(), element_less);
                        w.longer = {from_int(order_, p0), from_int(order_, q0), from_int(order_, r)};
                        std::sort(w.longer.begin(), w.longer.end(), element_less);
                        return verify(w);
                    }
                }
            }
        }
    }
    throw Error("carlitz_witness: no witness found in prime scan range");
}

HfdCertificate FactorContext::hfd_certify(const Int& bound) {
    if (bound < 2) throw ValidationError("hfd_certify: bound must be >= 2");
    if (order_.is_maximal()) {
        auto cg = class_group(order_);
        if (cg.h <= 2)
            return {order_, HfdVerdict::certified_hfd, bound, std::nullopt, HfdMethod::carlitz};
        return {order_, HfdVerdict::not_hfd, bound, carlitz_witness(), HfdMethod::carlitz};
    }
    for (Int n = 2; n <= bound; ++n) {
        for (const auto& x : canonical_elements_of_norm(n)) {
            const auto& L = length_set(x);
            if (L.size() <= 1) continue;
            auto fs = factorizations(x);
            HfdWitness w{x, {}, {}};
            for (const auto& f : fs.factorizations) {
                if (f.size() == fs.lengths.front()) w.shorter = f;
                if (f.size() == fs.lengths.back()) w.longer = f;
            }
            return {order_, HfdVerdict::not_hfd, n, w, HfdMethod::exhaustive};
        }
    }
    return {order_, HfdVerdict::hfd_up_to_bound, bound, std::nullopt, HfdMethod::exhaustive};
}

ElasticityResult FactorContext::elasticity_up_to(const Int& bound) {
    if (bound < 2) throw ValidationError("elasticity_up_to: bound must be >= 2");
    ElasticityResult res{Rat(1), std::nullopt, {}, {}};
    for (Int n = 2; n <= bound; ++n) {
        for (const auto& x : canonical_elements_of_norm(n)) {
            const auto& L = length_set(x);
            if (L.size() <= 1) continue;
            Rat rho(*L.rbegin(), *L.begin());
            rho.canonicalize();
            if (rho > res.value) {
                res.value = rho;
                res.witness = x;
            }
        }
    }
    if (res.witness) {
        auto fs = factorizations(*res.witness);
        for (const auto& f : fs.factorizations) {
            if (f.size() == fs.lengths.front()) res.shortest = f;
            if (f.size() == fs.lengths.back()) res.longest = f;
        }
    }
    return res;
}

bool is_irreducible(const QuadraticOrder& O, const OrderElement& x) {
    FactorContext ctx(O);
    return ctx.is_irreducible(x);
}

FactorizationSet factorizations(const QuadraticOrder& O, const OrderElement& x) {
    FactorContext ctx(O);
    return ctx.factorizations(x);
}

std::vector<OrderElement> irreducibles_up_to(const QuadraticOrder& O, const Int& bound) {
    FactorContext ctx(O);
    return ctx.irreducibles_up_to(bound);
}

HfdCertificate hfd_certify(const QuadraticOrder& O, const Int& bound) {
    FactorContext ctx(O);
    return ctx.hfd_certify(bound);
}

ElasticityResult elasticity_up_to(const QuadraticOrder& O, const Int& bound) {
    FactorContext ctx(O);
    return ctx.elasticity_up_to(bound);
}

}  // namespace qflab
