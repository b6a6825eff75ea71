#include "qflab/order.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qflab/errors.hpp"

namespace qflab {

QuadraticOrder QuadraticOrder::maximal() const {
    return make_order(d, 1);
}

QuadraticOrder make_order(const Int& d, const Int& f) {
    if (d >= 0)
        throw ValidationError("make_order: d must be negative (imaginary quadratic field)");
    if (!is_squarefree(d))
        throw ValidationError("make_order: d must be squarefree");
    if (f < 1)
        throw ValidationError("make_order: conductor index f must be >= 1");

    QuadraticOrder O;
    O.d = d;
    O.f = f;
    bool one_mod_four = positive_mod(d, 4) == 1;
    O.dK = one_mod_four ? d : Int(4 * d);
    O.disc = f * f * O.dK;
    // omega has trace t and norm n with omega^2 = t*omega - n;
    // tau = f*omega has trace f*t and norm f^2*n.
    Int t = one_mod_four ? 1 : 0;
    Int n = one_mod_four ? Int((1 - d) / 4) : Int(-d);
    O.trace_tau = f * t;
    O.norm_tau = f * f * n;
    return O;
}

Int OrderElement::norm() const {
    // (a + b*tau)(a + b*conj(tau)) with tau + conj(tau) = trace_tau
    return a * a + order.trace_tau * a * b + order.norm_tau * b * b;
}

OrderElement OrderElement::conj() const {
    return {order, a + order.trace_tau * b, -b};
}

OrderElement OrderElement::to_maximal() const {
    return {order.maximal(), a, b * order.f};
}

OrderElement operator*(const OrderElement& x, const OrderElement& y) {
    if (x.order != y.order)
        throw ValidationError("OrderElement multiply: mismatched parent orders");
    // tau^2 = trace_tau * tau - norm_tau
    Int a = x.a * y.a - x.b * y.b * x.order.norm_tau;
    Int b = x.a * y.b + x.b * y.a + x.b * y.b * x.order.trace_tau;
    return {x.order, a, b};
}

OrderElement operator+(const OrderElement& x, const OrderElement& y) {
    if (x.order != y.order)
        throw ValidationError("OrderElement add: mismatched parent orders");
    return {x.order, x.a + y.a, x.b + y.b};
}

OrderElement operator-(const OrderElement& x, const OrderElement& y) {
    if (x.order != y.order)
        throw ValidationError("OrderElement subtract: mismatched parent orders");
    return {x.order, x.a - y.a, x.b - y.b};
}

std::optional<OrderElement> divide_exact(const OrderElement& x, const OrderElement& y) {
    if (y.is_zero())
        throw ValidationError("divide_exact: division by zero");
    if (x.order != y.order)
        throw ValidationError("divide_exact: mismatched parent orders");
    // x/y = x * conj(y) / norm(y); integral iff both coordinates divide.
    OrderElement num = x * y.conj();
    Int n = y.norm();
    if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
    return OrderElement{x.order, num.a / n, num.b / n};
}

std::vector<OrderElement> elements_of_norm(const QuadraticOrder& O, const Int& n) {
    if (n < 1) throw ValidationError("elements_of_norm: n must be positive");
    // 4*N(a,b) = (2a + T*b)^2 + |disc| * b^2, so |b| <= sqrt(4n/|disc|).
    std::vector<OrderElement> out;
    Int abs_disc = -O.disc;
    Int four_n = 4 * n;
    Int bmax = isqrt(four_n / abs_disc);
    for (Int b = -bmax; b <= bmax; ++b) {
        Int rest = four_n - abs_disc * b * b;
        auto s = perfect_square_root(rest);
        if (!s) continue;
        for (int sign : {1, -1}) {
            if (sign == -1 && *s == 0) break;
            Int two_a = sign * *s - O.trace_tau * b;
            if (two_a % 2 != 0) continue;
            out.emplace_back(O, Int(two_a / 2), b);
        }
    }
    std::sort(out.begin(), out.end(), [](const OrderElement& x, const OrderElement& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return out;
}

std::vector<OrderElement> units(const QuadraticOrder& O) {
    return elements_of_norm(O, 1);
}

static std::tuple<bool, bool, Int, Int> associate_key(const OrderElement& x) {
    return {x.a < 0, x.b < 0, x.a, x.b};
}

OrderElement canonical_associate(const OrderElement& x) {
    if (x.is_zero()) return x;
    OrderElement best = x;
    auto best_key = associate_key(x);
    for (const auto& u : units(x.order)) {
        OrderElement cand = u * x;
        auto key = associate_key(cand);
        if (key < best_key) {
            best = cand;
            best_key = key;
        }
    }
    return best;
}

bool element_less(const OrderElement& x, const OrderElement& y) {
    Int nx = x.norm(), ny = y.norm();
    return std::tie(nx, x.a, x.b) < std::tie(ny, y.a, y.b);
}

OrderElement from_int(const QuadraticOrder& O, const Int& n) {
    return {O, n, 0};
}

std::optional<OrderElement> from_radical(const QuadraticOrder& O, const Int& x, const Int& y) {
    // d = 2,3 mod 4: omega = sqrt(d), so x + y*sqrt(d) = x + y*omega.
    // d = 1 mod 4: sqrt(d) = 2*omega - 1, so x + y*sqrt(d) = (x-y) + 2y*omega.
    Int a, B;
    if (positive_mod(O.d, 4) == 1) {
        a = x - y;
        B = 2 * y;
    } else {
        a = x;
        B = y;
    }
    if (B % O.f != 0) return std::nullopt;
    return OrderElement{O, a, Int(B / O.f)};
}

std::optional<OrderElement> into_order(const QuadraticOrder& O, const OrderElement& x_maximal) {
    if (!x_maximal.order.is_maximal() || x_maximal.order.d != O.d)
        throw ValidationError("into_order: element must be over the maximal order of the same field");
    if (x_maximal.b % O.f != 0) return std::nullopt;
    return OrderElement{O, x_maximal.a, Int(x_maximal.b / O.f)};
}

bool order_contains(const QuadraticOrder& O, const OrderElement& x_maximal) {
    return into_order(O, x_maximal).has_value();
}

std::string to_radical_string(const OrderElement& x) {
    // Rebase to {1, omega} and write over sqrt(d): a + b*omega =
    // (2a+b + b*sqrt(d))/2 when d = 1 mod 4, else a + b*sqrt(d).
    OrderElement m = x.order.is_maximal() ? x : x.to_maximal();
    Int p, q, den;
    if (positive_mod(m.order.d, 4) == 1) {
        p = 2 * m.a + m.b;
        q = m.b;
        den = 2;
        if (p % 2 == 0 && q % 2 == 0) {
            p /= 2;
            q /= 2;
            den = 1;
        }
    } else {
        p = m.a;
        q = m.b;
        den = 1;
    }
    std::ostringstream os;
    if (den != 1) os << "(";
    if (q == 0) {
        os << p;
    } else {
        if (p != 0) os << p << (q > 0 ? "+" : "");
        if (q == -1)
            os << "-";
        else if (q != 1)
            os << q << "*";
        os << "sqrt(" << m.order.d << ")";
    }
    if (den != 1) os << ")/" << den;
    return os.str();
}

std::string to_coord_string(const OrderElement& x) {
    std::ostringstream os;
    os << "(" << x.a << "," << x.b << ")@[d=" << x.order.d << ",f=" << x.order.f << "]";
    return os.str();
}

KElement::KElement(OrderElement n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (num.is_zero()) throw ValidationError("KElement: numerator must be nonzero");
    if (den <= 0) throw ValidationError("KElement: denominator must be positive");
    if (!num.order.is_maximal())
        throw ValidationError("KElement: numerator must be over the maximal order");
    Int g = gcd(gcd(num.a, num.b), den);
    if (g > 1) {
        num.a /= g;
        num.b /= g;
        den /= g;
    }
}

KElement operator*(const KElement& x, const KElement& y) {
    return {x.num * y.num, x.den * y.den};
}

KElement k_element(const OrderElement& x) {
    return {x.order.is_maximal() ? x : x.to_maximal(), 1};
}

std::string to_string(const KElement& x) {
    std::ostringstream os;
    if (x.den == 1) {
        os << to_radical_string(x.num);
    } else {
        os << "(" << to_radical_string(x.num) << ")/" << x.den;
    }
    return os.str();
}

}  // namespace qflab
