#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "census/surfaces.hpp"

namespace census {

// Automorphism (w, z) -> (u w + c, z + t) of a product of elliptic curves:
// a multiplication on the first factor composed with translations. The
// second coordinate only gets translated, matching the normal form in which
// the covering group of a bielliptic quotient acts on the base curve by
// translations alone.
struct GroupElement {
    FieldElement u;
    FieldElement c;
    FieldElement t;
};

GroupElement identity_element(const AbelianProduct& S);

// u must be a ring unit carrying lam_w to itself; c and t can be arbitrary.
bool element_well_defined(const GroupElement& g, const AbelianProduct& S);

// g applied after h.
GroupElement compose(const GroupElement& g, const GroupElement& h,
                     const AbelianProduct& S);
GroupElement inverse_element(const GroupElement& g, const AbelianProduct& S);

// Reduce both translation parts into the fundamental domain.
GroupElement normalize_element(const GroupElement& g, const AbelianProduct& S);

// Equality as automorphisms: u exactly, translations modulo the lattices.
bool same_element(const GroupElement& g, const GroupElement& h,
                  const AbelianProduct& S);
bool is_identity_element(const GroupElement& g, const AbelianProduct& S);

SurfacePoint apply_element(const GroupElement& g, const SurfacePoint& p,
                           const AbelianProduct& S);

// Image of a curve under g, returned in canonical form. A graph w = alpha z + a
// maps to w = (u alpha) z + (u a + c - u alpha t), and symmetrically for
// graphs over w; fibers map to fibers.
CurveOnProduct curve_image(const GroupElement& g, const CurveOnProduct& c,
                           const AbelianProduct& S);

// Finite automorphism group given by generators with declared orders.
struct QuotientAction {
    AbelianProduct surface;
    std::vector<GroupElement> generators;
    std::vector<unsigned> declared_orders;
};

// Every element of the generated group, identity first, in a deterministic
// order. Throws logic_error if the closure exceeds the product of the
// declared orders; validate the shape first when that is possible.
std::vector<GroupElement> action_elements(const QuotientAction& A);

// The generators commute as automorphisms, each has exactly its declared
// order, and the closure realizes the full product order.
bool action_has_declared_shape(const QuotientAction& A);

// The quotient is an unramified cover of the declared shape exactly when the
// group embeds into the base curve through its second translation parts. An
// element with u != 1 always fixes a point of the first factor, and a
// nontrivial element with t in the lattice would act only on the first
// factor, collapsing the quotient onto a smaller product. So the action
// counts as free iff every nontrivial element moves z by a point outside
// the lattice.
bool action_is_free(const QuotientAction& A);

struct UpstairsConfig {
    QuotientAction action;
    std::vector<CurveOnProduct> curves;
};

struct OrbitReport {
    std::vector<SurfacePoint> points;
    std::vector<std::vector<std::size_t>> orbits;
    bool transitive;
    std::size_t downstairs_singular_points;
    std::size_t branches_per_point;
};

// Intersection structure of a curve configuration relative to the action.
// Requires the group to permute the curves and all pairwise intersection
// sets to coincide, so that each common point is an r-fold point of the
// image curve downstairs; the orbit count is then the number of singular
// points of that image. Freeness is not required here: the structure is
// also used to study groups that fail the freeness test.
OrbitReport orbit_analysis(const UpstairsConfig& cfg);

// Same, but reports the two data-dependent failures through *why instead of
// throwing: "action does not permute the configuration" and "pairwise
// intersection sets differ". Precondition violations still throw.
std::optional<OrbitReport> try_orbit_analysis(const UpstairsConfig& cfg,
                                              std::string* why);

// Relabeling (w, z) -> (v w + c, v' z + d) of the product, used to identify
// equivalent quotient configurations. v and v' must be units preserving the
// respective lattices.
struct Symmetry {
    FieldElement v;
    FieldElement c;
    FieldElement vp;
    FieldElement d;
};

bool symmetry_well_defined(const Symmetry& s, const AbelianProduct& S);

// s g s^{-1}; for g = (u, c0, t0) this is (u, v c0 + (1 - u) c, v' t0).
GroupElement conjugate_element(const Symmetry& s, const GroupElement& g,
                               const AbelianProduct& S);
CurveOnProduct symmetry_curve_image(const Symmetry& s, const CurveOnProduct& c,
                                    const AbelianProduct& S);
SurfacePoint symmetry_point_image(const Symmetry& s, const SurfacePoint& p,
                                  const AbelianProduct& S);

}  // namespace census
