#pragma once

#include <cstddef>
#include <vector>

#include "census/lattice.hpp"

namespace census {

// (C/L_w) x (C/L_z) with coordinates (w, z).
struct AbelianProduct {
    Lattice lam_w;
    Lattice lam_z;

    AbelianProduct(Lattice w, Lattice z) : lam_w(std::move(w)), lam_z(std::move(z)) {
        if (lam_w.field() != lam_z.field())
            throw std::invalid_argument("product factors over different fields");
    }
    const QuadraticField& field() const { return lam_w.field(); }
};

enum class CurveKind { graph_over_z, graph_over_w, w_fiber, z_fiber };

// A subgroup-translate curve on the product. Graphs over z are
// {w = alpha z + a}, graphs over w are {z = alpha w + a}, fibers fix one
// coordinate. Slopes must satisfy the homomorphism condition to define a
// curve on the quotient (curve_well_defined).
struct CurveOnProduct {
    CurveKind kind;
    FieldElement alpha;
    FieldElement a;

    static CurveOnProduct graph_over_z(const FieldElement& alpha, const FieldElement& a) {
        return {CurveKind::graph_over_z, alpha, a};
    }
    static CurveOnProduct graph_over_w(const FieldElement& alpha, const FieldElement& a) {
        return {CurveKind::graph_over_w, alpha, a};
    }
    static CurveOnProduct w_fiber(const FieldElement& c) {
        return {CurveKind::w_fiber, fe_zero(c.field), c};
    }
    static CurveOnProduct z_fiber(const FieldElement& c) {
        return {CurveKind::z_fiber, fe_zero(c.field), c};
    }

    friend bool operator==(const CurveOnProduct& c, const CurveOnProduct& d) {
        return c.kind == d.kind && c.alpha == d.alpha && c.a == d.a;
    }
    friend bool operator!=(const CurveOnProduct& c, const CurveOnProduct& d) {
        return !(c == d);
    }
};

bool curve_well_defined(const CurveOnProduct& c, const AbelianProduct& S);

// Point-set normal form: zero-slope graphs become fibers, invertible graphs
// over w are rewritten as graphs over z, offsets are reduced into the
// fundamental domain. Two well-defined curves are equal as subsets of the
// product iff their canonical forms are identical.
CurveOnProduct canonical_curve(const CurveOnProduct& c, const AbelianProduct& S);

bool same_curve(const CurveOnProduct& c, const CurveOnProduct& d, const AbelianProduct& S);

struct SurfacePoint {
    LatticePoint w;
    LatticePoint z;

    friend bool operator==(const SurfacePoint& p, const SurfacePoint& q) {
        return p.w == q.w && p.z == q.z;
    }
    friend bool operator<(const SurfacePoint& p, const SurfacePoint& q) {
        if (p.w.value != q.w.value) return p.w.value < q.w.value;
        return p.z.value < q.z.value;
    }
};

bool point_on_curve(const CurveOnProduct& c, const AbelianProduct& S,
                    const FieldElement& w, const FieldElement& z);

// Intersection theory for distinct subgroup-translate curves. Identical
// curves are rejected ("self-intersection undefined here"); parallel
// translates meet in 0 points, everything else in finitely many.
Int intersection_number(const CurveOnProduct& c1, const CurveOnProduct& c2,
                        const AbelianProduct& S);

std::vector<SurfacePoint> intersection_points(const CurveOnProduct& c1,
                                              const CurveOnProduct& c2,
                                              const AbelianProduct& S);

CurveOnProduct translate_curve(const CurveOnProduct& c, const FieldElement& tw,
                               const FieldElement& tz, const AbelianProduct& S);

// Representatives of ker(x -> delta*x : C/src -> C/dst), i.e. of the quotient
// (delta^{-1} dst)/src, as canonical points of C/src. Requires delta*src
// contained in dst; the kernel has order [dst : delta*src].
std::vector<LatticePoint> division_kernel(const FieldElement& delta,
                                          const Lattice& src, const Lattice& dst);

// ---- good-configuration census ----

// The slope domain for the configuration search: one of the two concrete CM
// lattices, or the marker for a lattice with no extra endomorphisms, whose
// unit group {+-1} is declared rather than computed (a transcendental period
// is not exactly representable; only the unit group enters the argument).
enum class SlopeDomainKind { eisenstein, gaussian, generic };

struct SlopeDomain {
    SlopeDomainKind kind;
    QuadraticField field;  // carrier for the slope symbols

    static SlopeDomain eisenstein() {
        return {SlopeDomainKind::eisenstein, QuadraticField::eisenstein()};
    }
    static SlopeDomain gaussian() {
        return {SlopeDomainKind::gaussian, QuadraticField::gaussian()};
    }
    static SlopeDomain generic() {
        return {SlopeDomainKind::generic, QuadraticField::eisenstein()};
    }
};

// All alpha with alpha*L = L, in a fixed deterministic order.
std::vector<FieldElement> unit_slopes(const SlopeDomain& D);
std::vector<FieldElement> unit_slopes(const Lattice& L);

struct Configuration {
    std::vector<CurveOnProduct> curves;
};

struct ConfigurationClass {
    std::vector<std::size_t> members;  // indices into configurations
    Configuration canonical;
};

struct GoodConfigurationCensus {
    SlopeDomainKind domain;
    std::vector<Configuration> configurations;
    std::vector<ConfigurationClass> classes;
};

// Search for configurations {z = 0, w = 0, w = alpha1 z, w = alpha2 z} whose
// six pairwise intersection numbers are all 1 and whose curves meet only at
// the origin, then group them by unit rescaling of w and coordinate swap.
GoodConfigurationCensus good_configuration_search(const SlopeDomain& D);

}  // namespace census
