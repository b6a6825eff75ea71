#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qflab/integers.hpp"

namespace qflab {

/* An order Z + f*O_K in the imaginary quadratic field Q(sqrt(d)), identified
 * by the squarefree field parameter d < 0 and the conductor index f >= 1.
 * Elements are written over the basis {1, tau} with tau = f*omega, where
 * omega = sqrt(d)       for d = 2, 3 mod 4,
 * omega = (1+sqrt(d))/2 for d = 1 mod 4.
 * tau satisfies x^2 - trace_tau*x + norm_tau = 0.
 */
struct QuadraticOrder {
    Int d;          // squarefree, negative, != -1 is allowed; d not in {0,1}
    Int f;          // conductor index; f = 1 is the maximal order
    Int dK;         // field discriminant: d if d = 1 mod 4, else 4d
    Int disc;       // order discriminant: f^2 * dK
    Int trace_tau;  // f * trace(omega)
    Int norm_tau;   // f^2 * norm(omega)

    bool is_maximal() const { return f == 1; }
    QuadraticOrder maximal() const;

    friend bool operator==(const QuadraticOrder&, const QuadraticOrder&) = default;
};

// Validates d (negative, squarefree) and f >= 1.
QuadraticOrder make_order(const Int& d, const Int& f);

/* a + b*tau over the parent order's basis. Immutable value; arithmetic
 * requires matching parents. */
struct OrderElement {
    QuadraticOrder order;
    Int a, b;

    OrderElement(QuadraticOrder o, Int a_, Int b_)
        : order(std::move(o)), a(std::move(a_)), b(std::move(b_)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const { return norm() == 1; }
    Int norm() const;
    OrderElement conj() const;
    OrderElement operator-() const { return {order, -a, -b}; }

    // Coordinates over the maximal order's basis {1, omega}: (a, f*b).
    OrderElement to_maximal() const;

    friend OrderElement operator*(const OrderElement&, const OrderElement&);
    friend OrderElement operator+(const OrderElement&, const OrderElement&);
    friend OrderElement operator-(const OrderElement&, const OrderElement&);
    friend bool operator==(const OrderElement&, const OrderElement&) = default;
};

// x = q*y exactly with q in the common parent order, or nullopt.
// y = 0 is a contract violation.
std::optional<OrderElement> divide_exact(const OrderElement& x, const OrderElement& y);

// q = x * y^-1 in K; exact when y != 0, not required to be integral.
// Here used through divide_exact only.

// All elements of O with norm exactly n, in ascending (a, b) coordinate
// order. Empty result is a valid answer.
std::vector<OrderElement> elements_of_norm(const QuadraticOrder& O, const Int& n);

// The (finite) unit group: {1,-1} except for the two maximal orders with
// extra units (d = -1: 4 units, d = -3: 6 units).
std::vector<OrderElement> units(const QuadraticOrder& O);

/* Deterministic representative of the unit orbit of x: the orbit element
 * whose coordinate pair minimizes (a<0, b<0, a, b). Nonnegative coordinates
 * are preferred, ties broken by the smaller pair. */
OrderElement canonical_associate(const OrderElement& x);

// Strict ordering by (norm, a, b); the sort key for factor lists and sweeps.
bool element_less(const OrderElement& x, const OrderElement& y);

// Integer n as an element of O.
OrderElement from_int(const QuadraticOrder& O, const Int& n);

// x + y*sqrt(d) as an element of O, when it lies in O.
std::optional<OrderElement> from_radical(const QuadraticOrder& O, const Int& x, const Int& y);

// Rebase an element given over the maximal order's basis into O (f | b needed).
std::optional<OrderElement> into_order(const QuadraticOrder& O, const OrderElement& x_maximal);

// Membership of a maximal-order element in the suborder O of the same field.
bool order_contains(const QuadraticOrder& O, const OrderElement& x_maximal);

// Rendering: "x+y*sqrt(d)" or "(x+y*sqrt(d))/2", plus a coordinate form.
std::string to_radical_string(const OrderElement& x);
std::string to_coord_string(const OrderElement& x);

/* Nonzero element of K* as num/den with num over the maximal order and
 * den a positive integer, in lowest terms. */
struct KElement {
    OrderElement num;  // over the maximal order, nonzero
    Int den;           // positive

    KElement(OrderElement n, Int d);

    friend KElement operator*(const KElement&, const KElement&);
    friend bool operator==(const KElement&, const KElement&) = default;
};

KElement k_element(const OrderElement& x);  // x/1 rebased to the maximal order
std::string to_string(const KElement& x);

}  // namespace qflab
