#include "qflab/class_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "qflab/errors.hpp"

namespace qflab {

bool is_reduced(const QuadForm& f) {
    if (!(abs(f.B) <= f.A && f.A <= f.C)) return false;
    if ((abs(f.B) == f.A || f.A == f.C) && f.B < 0) return false;
    return true;
}

QuadForm reduce_form(QuadForm f) {
    if (f.disc() >= 0) throw ValidationError("reduce_form: discriminant must be negative");
    while (true) {
        // normalize B into (-A, A]
        if (f.B > f.A || f.B <= -f.A) {
            Int k;
            // B + 2kA in (-A, A] for k = round(-B / 2A) via floor((A - B) / 2A)
            mpz_fdiv_q(k.get_mpz_t(), Int(f.A - f.B).get_mpz_t(), Int(2 * f.A).get_mpz_t());
            Int B2 = f.B + 2 * k * f.A;
            f.C = f.C + k * f.B + k * k * f.A;
            f.B = B2;
        }
        if (f.A > f.C) {
            f = {f.C, -f.B, f.A};
            continue;
        }
        if (f.A == f.C && f.B < 0) f.B = -f.B;
        if (f.B == -f.A) f.B = f.A;  // unreachable after normalize; kept for clarity
        return f;
    }
}

QuadForm principal_form(const Int& disc) {
    Int B = positive_mod(disc, 2);
    return {1, B, (B * B - disc) / 4};
}

QuadForm inverse_form(const QuadForm& f) {
    return reduce_form({f.A, -f.B, f.C});
}

namespace {

// f transformed by [[x, z], [y, w]] with xw - yz = 1.
QuadForm transform(const QuadForm& f, const Int& x, const Int& y, const Int& z, const Int& w) {
    Int A = f.A * x * x + f.B * x * y + f.C * y * y;
    Int C = f.A * z * z + f.B * z * w + f.C * w * w;
    Int B = 2 * f.A * x * z + f.B * (x * w + y * z) + 2 * f.C * y * w;
    return {A, B, C};
}

// Equivalent form whose leading coefficient is coprime to m, found by
// scanning primitively represented values over a growing box.
QuadForm make_leading_coprime(const QuadForm& f, const Int& m) {
    if (gcd(f.A, m) == 1) return f;
    for (Int L = 1; L < 1000000; L *= 2) {
        for (Int x = -L; x <= L; ++x) {
            for (Int y = -L; y <= L; ++y) {
                if (gcd(x, y) != 1) continue;
                Int v = f.A * x * x + f.B * x * y + f.C * y * y;
                if (v == 0 || gcd(v, m) != 1) continue;
                auto [g, w, nz] = ext_gcd(x, y);  // w*x + nz*y = 1
                return transform(f, x, y, -nz, w);
            }
        }
    }
    throw Error("make_leading_coprime: no representative found (non-primitive form?)");
}

}  // namespace

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    if (f.disc() != g.disc()) throw ValidationError("compose: discriminants differ");
    Int D = f.disc();
    // Arrange coprime leading coefficients, then a common middle coefficient
    // (concordant forms): B = b1 mod 2a1, B = b2 mod 2a2.
    QuadForm f1 = f;
    QuadForm f2 = make_leading_coprime(g, f.A);
    auto crt = crt_pair(positive_mod(f1.B, 2 * f1.A), 2 * f1.A,
                        positive_mod(f2.B, 2 * f2.A), 2 * f2.A);
    if (!crt) throw Error("compose: concordance CRT failed");
    Int B = crt->first;
    Int A = f1.A * f2.A;
    Int C = (B * B - D) / (4 * A);
    return reduce_form({A, B, C});
}

QuadForm form_pow(const QuadForm& f, const Int& k) {
    if (k < 0) return form_pow(inverse_form(f), -k);
    QuadForm acc = principal_form(f.disc());
    QuadForm base = f;
    Int e = k;
    while (e > 0) {
        if (e % 2 == 1) acc = compose(acc, base);
        base = compose(base, base);
        e /= 2;
    }
    return acc;
}

std::vector<QuadForm> reduced_forms(const Int& disc) {
    if (disc >= 0) throw ValidationError("reduced_forms: discriminant must be negative");
    if (positive_mod(disc, 4) > 1)
        throw ValidationError("reduced_forms: discriminant must be 0 or 1 mod 4");
    std::vector<QuadForm> out;
    // |B| <= A <= C forces 3A^2 <= 4AC - B^2 + A^2 <= |disc| + A^2, so A <= sqrt(|disc|/3).
    Int Amax = isqrt(-disc / 3);
    for (Int A = 1; A <= Amax; ++A) {
        for (Int B = -A + 1; B <= A; ++B) {
            Int num = B * B - disc;
            if (num % (4 * A) != 0) continue;
            Int C = num / (4 * A);
            if (C < A) continue;
            if (A == C && B < 0) continue;
            if (gcd(gcd(A, B), C) != 1) continue;
            out.push_back({A, B, C});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Partition of the Sylow p-subgroup from p^k-torsion counts: the number of
// parts >= k equals log_p #G[p^k] - log_p #G[p^(k-1)].
std::vector<unsigned> sylow_partition(const std::vector<QuadForm>& forms, const Int& p) {
    QuadForm id = principal_form(forms.front().disc());
    std::vector<unsigned> conjugate;  // conjugate partition: parts >= k, for k = 1, 2, ...
    unsigned long prev = 0;
    for (unsigned k = 1;; ++k) {
        Int pk = 1;
        for (unsigned i = 0; i < k; ++i) pk *= p;
        unsigned long count = 0;
        for (const auto& f : forms)
            if (form_pow(f, pk) == id) ++count;
        // count = p^s
        unsigned long s = 0;
        for (unsigned long c = count; c > 1; c /= mpz_get_ui(p.get_mpz_t())) ++s;
        if (s == prev) break;
        conjugate.push_back(static_cast<unsigned>(s - prev));
        prev = s;
    }
    // transpose the conjugate partition
    std::vector<unsigned> parts;
    for (unsigned i = 0; i < (conjugate.empty() ? 0 : conjugate[0]); ++i) {
        unsigned len = 0;
        for (unsigned v : conjugate)
            if (v > i) ++len;
        parts.push_back(len);
    }
    return parts;  // descending exponents
}

}  // namespace

ClassGroupInfo class_group_uncached(const Int& disc) {
    ClassGroupInfo info;
    info.representatives = reduced_forms(disc);
    info.h = static_cast<long>(info.representatives.size());

    // Invariant factors: combine Sylow partitions across primes, largest first.
    std::vector<Int> factors;
    for (const auto& [p, e] : factor_integer(info.h)) {
        auto parts = sylow_partition(info.representatives, p);
        for (size_t i = 0; i < parts.size(); ++i) {
            Int pe = 1;
            for (unsigned j = 0; j < parts[i]; ++j) pe *= p;
            if (i < factors.size())
                factors[i] *= pe;
            else
                factors.push_back(pe);
        }
    }
    std::sort(factors.begin(), factors.end());  // ascending divisibility chain
    info.invariants = std::move(factors);
    if (info.invariants.empty() && info.h == 1) info.invariants = {};
    Int prod = 1;
    for (const auto& d : info.invariants) prod *= d;
    if (prod != info.h) throw Error("class_group: invariant factors do not multiply to h");
    return info;
}

ClassGroupInfo class_group(const QuadraticOrder& O) {
    static std::mutex cache_mutex;
    static std::map<Int, ClassGroupInfo> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(O.disc);
    if (it == cache.end()) it = cache.emplace(O.disc, class_group_uncached(O.disc)).first;
    return it->second;
}

std::string to_string(const QuadForm& f) {
    std::ostringstream os;
    os << "(" << f.A << "," << f.B << "," << f.C << ")";
    return os.str();
}

}  // namespace qflab
