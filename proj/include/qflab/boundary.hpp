#pragma once

#include "qflab/factor.hpp"
#include "qflab/order.hpp"

namespace qflab {

/* Value of the boundary homomorphism K* -> Z attached to a half-factorial
 * order R: write x = a/b with a, b in R and take
 * (factorization length of a) - (factorization length of b). Additive under
 * multiplication; negative values occur for proper fractions. */
struct BoundaryValue {
    Int value;
    friend bool operator==(const BoundaryValue&, const BoundaryValue&) = default;
};

/* Computes the boundary of x with respect to ctx.order(). The certificate
 * must belong to the same order and cover every norm the computation needs;
 * otherwise UncertifiedDomainError. AmbiguousLengthError propagates when a
 * certified ring turns out not to have unique lengths (a refutation event).
 */
BoundaryValue boundary(FactorContext& ctx, const HfdCertificate& cert, const KElement& x);

// One-shot variant: certifies R at exactly the norms the query needs.
BoundaryValue boundary(const QuadraticOrder& R, const KElement& x);

// The norm the certificate must cover for boundary(R, x) to run.
Int boundary_required_norm(const QuadraticOrder& R, const KElement& x);

}  // namespace qflab
