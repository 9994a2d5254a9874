#include "census/lattice.hpp"

#include <stdexcept>

namespace census {

namespace {

// Determinant of the (1, lambda)-coordinate matrix of (x, y); nonzero exactly
// when x, y are R-linearly independent.
Rat coord_det(const FieldElement& x, const FieldElement& y) {
    return x.a * y.b - y.a * x.b;
}

}  // namespace

Lattice::Lattice(FieldElement w1_, FieldElement w2_)
    : w1(std::move(w1_)), w2(std::move(w2_)) {
    require_same_field(w1, w2);
    if (coord_det(w1, w2) == 0)
        throw std::invalid_argument("lattice basis is not full rank");
}

bool operator==(const Lattice& L, const Lattice& M) {
    if (L.field() != M.field()) return false;
    return lattice_contains(L.w1, M) && lattice_contains(L.w2, M) &&
           lattice_contains(M.w1, L) && lattice_contains(M.w2, L);
}

std::pair<Rat, Rat> lattice_coords(const FieldElement& x, const Lattice& L) {
    require_same_field(x, L.w1);
    // Cramer on [w1.a w2.a; w1.b w2.b] [m n]^t = [x.a x.b]^t
    Rat d = coord_det(L.w1, L.w2);
    Rat m = (x.a * L.w2.b - L.w2.a * x.b) / d;
    Rat n = (L.w1.a * x.b - x.a * L.w1.b) / d;
    return {m, n};
}

bool lattice_contains(const FieldElement& x, const Lattice& L) {
    auto [m, n] = lattice_coords(x, L);
    return is_integer(m) && is_integer(n);
}

Int lattice_index(const Lattice& sub, const Lattice& L) {
    auto [a, c] = lattice_coords(sub.w1, L);
    auto [b, d] = lattice_coords(sub.w2, L);
    if (!is_integer(a) || !is_integer(b) || !is_integer(c) || !is_integer(d))
        throw std::invalid_argument("lattice_index: first lattice is not a sublattice");
    Int det = rat_num(a) * rat_num(d) - rat_num(b) * rat_num(c);
    if (det < 0) det = -det;
    // det = 0 cannot happen: both lattices are full rank
    return det;
}

bool maps_into(const FieldElement& alpha, const Lattice& L, const Lattice& M) {
    return lattice_contains(alpha * L.w1, M) && lattice_contains(alpha * L.w2, M);
}

LatticePoint canonical_rep(const FieldElement& x, const Lattice& L) {
    auto [m, n] = lattice_coords(x, L);
    FieldElement v = fe_rat(frac_part(m), L.field()) * L.w1 +
                     fe_rat(frac_part(n), L.field()) * L.w2;
    return {v, L};
}

std::vector<LatticePoint> torsion_points(const Lattice& L, unsigned n) {
    std::vector<LatticePoint> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            FieldElement v = fe_rat(Rat(i, n), L.field()) * L.w1 +
                             fe_rat(Rat(j, n), L.field()) * L.w2;
            out.push_back({v, L});
        }
    return out;
}

}  // namespace census
