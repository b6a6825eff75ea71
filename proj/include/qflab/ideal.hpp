#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qflab/lattice.hpp"
#include "qflab/order.hpp"

namespace qflab {

/* Nonzero ideal of a maximal order, stored as the HNF module
 * a*Z + (b + c*omega)*Z. On top of the lattice normal form, ideals satisfy
 * c | a, c | b and a*c | N(b + c*omega); validated on construction.
 * norm = a*c. */
struct IntegralIdeal {
    QuadraticOrder order;  // maximal
    Lattice lat;

    const Int& a() const { return lat.a; }
    const Int& b() const { return lat.b; }
    const Int& c() const { return lat.c; }
    Int norm() const { return lat.index(); }
    bool is_unit() const { return lat.a == 1 && lat.c == 1; }

    friend bool operator==(const IntegralIdeal&, const IntegralIdeal&) = default;
};

// Validating constructor from an HNF module.
IntegralIdeal ideal_from_lattice(const QuadraticOrder& O, const Lattice& L);

// HNF of the module generated by {g, g*omega : g in gens}; rejects an
// all-zero generator list.
IntegralIdeal ideal_from_generators(const QuadraticOrder& O,
                                    const std::vector<OrderElement>& gens);

IntegralIdeal principal_ideal(const OrderElement& g);  // g over the maximal order
IntegralIdeal unit_ideal(const QuadraticOrder& O);
IntegralIdeal ideal_mul(const IntegralIdeal& I, const IntegralIdeal& J);
IntegralIdeal ideal_pow(const IntegralIdeal& I, unsigned k);
IntegralIdeal ideal_add(const IntegralIdeal& I, const IntegralIdeal& J);  // gcd
IntegralIdeal conj_ideal(const IntegralIdeal& I);
bool comaximal(const IntegralIdeal& I, const IntegralIdeal& J);
bool ideal_contains(const IntegralIdeal& I, const OrderElement& x);

// Canonical representative of x modulo I.
OrderElement reduce_mod_ideal(const IntegralIdeal& I, const OrderElement& x);

enum class SplitType { split, inert, ramified };

struct PrimeSplitting {
    Int p;
    SplitType type;
    std::vector<IntegralIdeal> primes;  // 2 for split, else 1
};

// Factorization of the minimal polynomial of omega mod p.
PrimeSplitting primes_above(const QuadraticOrder& O, const Int& p);

// Accepts exactly the primes produced by the splitting of some rational prime.
bool is_prime_ideal(const IntegralIdeal& I);

struct PrimeFactorization {
    std::vector<std::pair<IntegralIdeal, unsigned>> factors;  // sorted by (norm, a, b, c)

    bool radical() const;
    IntegralIdeal product(const QuadraticOrder& O) const;
};

PrimeFactorization factor_ideal(const IntegralIdeal& I);

// A generator when I is principal (searched among elements of norm(I)),
// reported as a canonical associate.
std::optional<OrderElement> is_principal(const IntegralIdeal& I);

// All ideals of the given norm, sorted by (a, b, c).
std::vector<IntegralIdeal> ideals_of_norm(const QuadraticOrder& O, const Int& n);

std::string to_string(const IntegralIdeal& I);

}  // namespace qflab
