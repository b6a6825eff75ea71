#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qflab {

using Int = mpz_class;
using Rat = mpq_class;

// floor(sqrt(n)), n >= 0
Int isqrt(const Int& n);

// Nonnegative root when n is a perfect square, nullopt otherwise.
std::optional<Int> perfect_square_root(const Int& n);

bool is_prime(const Int& n);

// Representative of a mod m in [0, m), m > 0.
Int positive_mod(const Int& a, const Int& m);

// All positive divisors of n > 0, ascending.
std::vector<Int> divisors(const Int& n);

// (prime, exponent) pairs of n > 0, primes ascending.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

bool is_squarefree(const Int& n);

struct ExtGcd {
    Int g, s, t;  // g = gcd(a,b) = s*a + t*b, g >= 0
};
ExtGcd ext_gcd(const Int& a, const Int& b);

std::optional<Int> mod_inverse(const Int& a, const Int& m);

// Square root of a mod an odd prime p (Tonelli-Shanks), nullopt when a is a
// nonresidue.
std::optional<Int> sqrt_mod_p(const Int& a, const Int& p);

// Smallest x >= 0 with x = r1 mod m1 and x = r2 mod m2, together with
// lcm(m1, m2); nullopt when the congruences are incompatible.
std::optional<std::pair<Int, Int>> crt_pair(const Int& r1, const Int& m1,
                                            const Int& r2, const Int& m2);

}  // namespace qflab
