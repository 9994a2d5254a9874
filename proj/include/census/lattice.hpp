#pragma once

#include <utility>
#include <vector>

#include "census/quadfield.hpp"

namespace census {

// Rank-2 lattice Z*w1 + Z*w2 inside the ambient field, viewed as a lattice
// in C. Full rank means w1, w2 are R-linearly independent, equivalently the
// 2x2 matrix of their (1, lambda) coordinates is invertible.
struct Lattice {
    FieldElement w1;
    FieldElement w2;

    Lattice(FieldElement w1_, FieldElement w2_);

    const QuadraticField& field() const { return w1.field; }

    friend bool operator==(const Lattice& L, const Lattice& M);
    friend bool operator!=(const Lattice& L, const Lattice& M) { return !(L == M); }
};

// Solve x = m*w1 + n*w2 for rational (m, n).
std::pair<Rat, Rat> lattice_coords(const FieldElement& x, const Lattice& L);

bool lattice_contains(const FieldElement& x, const Lattice& L);

// [L : sub] = |det| of the integer change-of-basis matrix.
// Throws std::invalid_argument when sub is not contained in L.
Int lattice_index(const Lattice& sub, const Lattice& L);

inline Lattice scaled(const FieldElement& alpha, const Lattice& L) {
    return Lattice(alpha * L.w1, alpha * L.w2);
}

// alpha * L contained in M, i.e. multiplication by alpha maps C/L into C/M.
bool maps_into(const FieldElement& alpha, const Lattice& L, const Lattice& M);

// A point of C/L in canonical reduced form: basis coordinates in [0,1)^2.
struct LatticePoint {
    FieldElement value;
    Lattice lattice;

    friend bool operator==(const LatticePoint& x, const LatticePoint& y) {
        return x.lattice == y.lattice && x.value == y.value;
    }
    friend bool operator!=(const LatticePoint& x, const LatticePoint& y) {
        return !(x == y);
    }
    friend bool operator<(const LatticePoint& x, const LatticePoint& y) {
        return x.value < y.value;
    }
};

LatticePoint canonical_rep(const FieldElement& x, const Lattice& L);

inline bool same_mod_lattice(const FieldElement& x, const FieldElement& y,
                             const Lattice& L) {
    return lattice_contains(x - y, L);
}

// The n^2 points of (1/n)L / L, canonical and deduplicated, in a fixed order.
std::vector<LatticePoint> torsion_points(const Lattice& L, unsigned n);

// Standard lattices used throughout.
inline Lattice std_lattice(const QuadraticField& f) {
    return Lattice(fe_one(f), fe_lambda(f));
}

}  // namespace census
