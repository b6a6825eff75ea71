#include "qflab/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace qflab {

namespace {

// Column-style HNF with transformation tracking. Columns of m are reduced in
// place; the same column operations are applied to u (when given), so that
// m_in * u = m_out holds throughout.
struct ColumnMatrix {
    std::vector<Vec2> col;
    std::vector<std::vector<Int>>* trans = nullptr;  // optional, square, one col per col

    void combine(size_t i, size_t j, const Int& s, const Int& t, const Int& p, const Int& q) {
        // (col_i, col_j) <- (s*col_i + t*col_j, p*col_i + q*col_j)
        Vec2 ci = col[i], cj = col[j];
        col[i] = {s * ci.first + t * cj.first, s * ci.second + t * cj.second};
        col[j] = {p * ci.first + q * cj.first, p * ci.second + q * cj.second};
        if (trans) {
            auto& u = *trans;
            for (size_t r = 0; r < u.size(); ++r) {
                Int ui = u[r][i], uj = u[r][j];
                u[r][i] = s * ui + t * uj;
                u[r][j] = p * ui + q * uj;
            }
        }
    }

    void negate(size_t i) {
        col[i] = {-col[i].first, -col[i].second};
        if (trans)
            for (auto& row : *trans) row[i] = -row[i];
    }

    // Accumulate the gcd of row `row` entries of columns [from, n) into
    // column `pivot`, zeroing that row elsewhere.
    void eliminate_row(int row, size_t pivot) {
        auto entry = [&](size_t j) -> Int& {
            return row == 0 ? col[j].first : col[j].second;
        };
        for (size_t j = 0; j < col.size(); ++j) {
            if (j == pivot || entry(j) == 0) continue;
            auto [g, s, t] = ext_gcd(entry(pivot), entry(j));
            // unimodular: [s t; -b/g a/g] applied to (pivot, j)
            Int p = -entry(j) / g, q = entry(pivot) / g;
            combine(pivot, j, s, t, p, q);
        }
        if (entry(pivot) < 0) negate(pivot);
    }
};

}  // namespace

Lattice hnf_from_generators(const std::vector<Vec2>& gens) {
    ColumnMatrix m{gens, nullptr};
    if (m.col.size() < 2)
        throw std::invalid_argument("hnf_from_generators: need at least two generators");
    // Gather the omega-row gcd into column 1, then the remaining integer row
    // into column 0.
    m.eliminate_row(1, 1);
    Int c = m.col[1].second;
    if (c == 0) throw std::invalid_argument("hnf_from_generators: generators not full rank");
    Int a = 0;
    for (size_t j = 0; j < m.col.size(); ++j) {
        if (j == 1) continue;
        a = gcd(a, m.col[j].first);
    }
    if (a == 0) throw std::invalid_argument("hnf_from_generators: generators not full rank");
    if (a < 0) a = -a;
    Int b = positive_mod(m.col[1].first, a);
    return {a, b, c};
}

bool lattice_contains(const Lattice& L, const Int& x, const Int& y) {
    if (y % L.c != 0) return false;
    return (x - (y / L.c) * L.b) % L.a == 0;
}

bool lattice_subset(const Lattice& inner, const Lattice& outer) {
    return lattice_contains(outer, inner.a, 0) && lattice_contains(outer, inner.b, inner.c);
}

Lattice lattice_intersect(const Lattice& L1, const Lattice& L2) {
    // y-coordinates in the intersection: y = l*k with l = lcm(c1, c2) and k
    // minimal such that the two first-coordinate congruences are compatible:
    //   x = (y/c1)*b1 (mod a1),  x = (y/c2)*b2 (mod a2).
    Int l = lcm(L1.c, L2.c);
    Int g = gcd(L1.a, L2.a);
    Int delta = positive_mod((l / L1.c) * L1.b - (l / L2.c) * L2.b, g);
    Int k = g / gcd(g, delta == 0 ? g : delta);
    Int c = l * k;
    auto crt = crt_pair(positive_mod((c / L1.c) * L1.b, L1.a), L1.a,
                        positive_mod((c / L2.c) * L2.b, L2.a), L2.a);
    if (!crt) throw std::logic_error("lattice_intersect: inconsistent CRT at minimal stratum");
    Int a = lcm(L1.a, L2.a);
    Int b = positive_mod(crt->first, a);
    return {a, b, c};
}

Vec2 lattice_reduce(const Lattice& L, const Int& x, const Int& y) {
    Int j = positive_mod(y, L.c);
    Int x2 = x - ((y - j) / L.c) * L.b;
    return {positive_mod(x2, L.a), j};
}

std::vector<Vec2> lattice_residues(const Lattice& L) {
    std::vector<Vec2> out;
    out.reserve(mpz_get_ui(L.index().get_mpz_t()));
    for (Int j = 0; j < L.c; ++j)
        for (Int i = 0; i < L.a; ++i) out.emplace_back(i, j);
    return out;
}

std::optional<std::vector<Int>> solve_in_span(const std::vector<Vec2>& gens,
                                              const Vec2& target) {
    size_t n = gens.size();
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;
    ColumnMatrix m{gens, &u};
    m.eliminate_row(1, 1);
    Int c = m.col[1].second;
    // Fold the remaining integer row into column 0.
    if (n > 2) {
        for (size_t j = 2; j < n; ++j) {
            if (m.col[j].first == 0) continue;
            if (m.col[0].first == 0) {
                m.combine(0, j, 0, 1, 1, 0);  // swap
                continue;
            }
            auto [g, s, t] = ext_gcd(m.col[0].first, m.col[j].first);
            Int p = -m.col[j].first / g, q = m.col[0].first / g;
            m.combine(0, j, s, t, p, q);
        }
    }
    if (m.col[0].first < 0) m.negate(0);
    Int a = m.col[0].first;
    // Now columns: (a, 0), (b, c), rest zero. Solve target = x*(a,0) + y*(b,c).
    if (c == 0 || a == 0) return std::nullopt;  // degenerate span
    if (target.second % c != 0) return std::nullopt;
    Int y = target.second / c;
    Int rem = target.first - y * m.col[1].first;
    if (rem % a != 0) return std::nullopt;
    Int x = rem / a;
    std::vector<Int> coeffs(n, 0);
    for (size_t r = 0; r < n; ++r) coeffs[r] = x * u[r][0] + y * u[r][1];
    return coeffs;
}

std::string to_string(const Lattice& L) {
    std::ostringstream os;
    os << "[" << L.a << "," << L.b << "," << L.c << "]";
    return os.str();
}

}  // namespace qflab
