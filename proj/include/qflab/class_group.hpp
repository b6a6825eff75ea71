#pragma once

#include <string>
#include <vector>

#include "qflab/integers.hpp"
#include "qflab/order.hpp"

namespace qflab {

/* Primitive positive definite binary quadratic form A*x^2 + B*x*y + C*y^2
 * of negative discriminant B^2 - 4AC. Reduced means |B| <= A <= C with
 * B >= 0 when |B| = A or A = C. */
struct QuadForm {
    Int A, B, C;

    Int disc() const { return B * B - 4 * A * C; }
    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend bool operator<(const QuadForm& f, const QuadForm& g) {
        if (f.A != g.A) return f.A < g.A;
        if (f.B != g.B) return f.B < g.B;
        return f.C < g.C;
    }
};

bool is_reduced(const QuadForm& f);
QuadForm reduce_form(QuadForm f);
QuadForm principal_form(const Int& disc);
QuadForm inverse_form(const QuadForm& f);

// Gauss composition (via concordant forms), result reduced.
QuadForm compose(const QuadForm& f, const QuadForm& g);
QuadForm form_pow(const QuadForm& f, const Int& k);

// All reduced primitive forms of the given negative discriminant, sorted.
std::vector<QuadForm> reduced_forms(const Int& disc);

struct ClassGroupInfo {
    Int h;                            // class number
    std::vector<Int> invariants;      // invariant factor chain d1 | d2 | ..., product = h
    std::vector<QuadForm> representatives;  // the reduced forms, sorted
};

// Form class group of discriminant f^2*dK: the ideal class group for f = 1,
// the Picard group of the order for f > 1. Memoized per discriminant behind
// a mutex; cached and uncached calls return identical data.
ClassGroupInfo class_group(const QuadraticOrder& O);
ClassGroupInfo class_group_uncached(const Int& disc);

std::string to_string(const QuadForm& f);

}  // namespace qflab
