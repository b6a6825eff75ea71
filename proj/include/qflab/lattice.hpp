#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qflab/integers.hpp"

namespace qflab {

/* Full-rank Z-submodule of Z^2 (coordinates over the maximal order basis
 * {1, omega}) in Hermite normal form: generated by (a, 0) and (b, c) with
 * a, c > 0 and 0 <= b < a. The representation is unique, so equality of
 * modules is equality of triples. */
struct Lattice {
    Int a, b, c;

    Int index() const { return a * c; }  // = [Z^2 : L]
    friend bool operator==(const Lattice&, const Lattice&) = default;
    friend bool operator<(const Lattice& x, const Lattice& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
};

using Vec2 = std::pair<Int, Int>;

// HNF of the module generated by the given vectors; they must span rank 2.
Lattice hnf_from_generators(const std::vector<Vec2>& gens);

bool lattice_contains(const Lattice& L, const Int& x, const Int& y);
inline bool lattice_contains(const Lattice& L, const Vec2& v) {
    return lattice_contains(L, v.first, v.second);
}

// inner subset of outer, decided on basis vectors.
bool lattice_subset(const Lattice& inner, const Lattice& outer);

Lattice lattice_intersect(const Lattice& L1, const Lattice& L2);

// Canonical representative of (x, y) modulo L: second coordinate reduced
// into [0, c), then first into [0, a).
Vec2 lattice_reduce(const Lattice& L, const Int& x, const Int& y);

// All index() residue representatives {(i, j) : 0 <= i < a, 0 <= j < c}.
std::vector<Vec2> lattice_residues(const Lattice& L);

// Integer coefficients z with sum z_i * gens_i = target, when target lies in
// the span of gens over Z.
std::optional<std::vector<Int>> solve_in_span(const std::vector<Vec2>& gens,
                                              const Vec2& target);

std::string to_string(const Lattice& L);

}  // namespace qflab
