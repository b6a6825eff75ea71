#include "qflab/boundary.hpp"

#include <algorithm>

#include "qflab/errors.hpp"

namespace qflab {

namespace {

// x = alpha/beta with both sides in R: clear the numerator into R by the
// conductor index when needed.
std::pair<OrderElement, OrderElement> clear_into(const QuadraticOrder& R, const KElement& x) {
    if (auto a = into_order(R, x.num))
        return {*a, from_int(R, x.den)};
    OrderElement scaled(x.num.order, x.num.a * R.f, x.num.b * R.f);
    auto a = into_order(R, scaled);
    if (!a) throw Error("boundary: conductor-scaled numerator not in R");
    return {*a, from_int(R, Int(x.den * R.f))};
}

}  // namespace

Int boundary_required_norm(const QuadraticOrder& R, const KElement& x) {
    auto [a, b] = clear_into(R, x);
    return std::max(a.norm(), b.norm());
}

BoundaryValue boundary(FactorContext& ctx, const HfdCertificate& cert, const KElement& x) {
    const QuadraticOrder& R = ctx.order();
    if (cert.order != R)
        throw ValidationError("boundary: certificate belongs to a different order");
    if (x.num.order.d != R.d)
        throw ValidationError("boundary: element of a different field");
    auto [a, b] = clear_into(R, x);
    if (!cert.covers(a.norm()) || !cert.covers(b.norm()))
        throw UncertifiedDomainError(
            "boundary: certificate does not cover the required norms (needed " +
            boundary_required_norm(R, x).get_str() + ")");
    Int n = ctx.unique_length(a);
    Int m = ctx.unique_length(b);
    return {n - m};
}

BoundaryValue boundary(const QuadraticOrder& R, const KElement& x) {
    FactorContext ctx(R);
    Int needed = boundary_required_norm(R, x);
    HfdCertificate cert = ctx.hfd_certify(std::max(needed, Int(2)));
    return boundary(ctx, cert, x);
}

}  // namespace qflab
