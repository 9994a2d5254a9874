#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace census {

// Minimal-surface types, carried symbolically by their (c1^2, c2). The
// markers exist so callers can say what they excluded; they support no
// Chern arithmetic beyond what their exclusion needs.
enum class MinimalType {
    abelian,
    bielliptic,
    k3,
    enriques,
    general_type_marker,
    ruled_marker,
};

struct SurfacePair {
    MinimalType minimal_type;
    int blowup_count = 0;
    std::vector<int> boundary_selfints;  // multiset of D_i^2, all strictly negative
    std::string group_label;             // optional tag for bielliptic(G)

    SurfacePair(MinimalType t, int k, std::vector<int> boundary,
                std::string group = {});
};

// (c1bar^2, c2bar) of the pair: c2bar = c2(min) + k and
// c1bar^2 = (c1^2(min) - k) - sum(D_i^2), using adjunction K.D_i = -D_i^2
// on the kappa = 0 minimal types.
std::pair<int, int> log_chern_numbers(const SurfacePair& p);

// Noether integrality: c1^2 + c2 = 0 (mod 12).
inline bool noether_filter(int c1sq, int c2) { return (c1sq + c2) % 12 == 0; }

// All multisets of negative integers whose negated sum is total, sorted
// ascending (most negative first); one entry per partition of total.
std::vector<std::vector<int>> boundary_profiles(int total);

// A solution of r^2 - r - 2n = 0: an elliptic curve of self-intersection
// C^2 = 2n through a point of multiplicity r, contracting to boundary
// self-intersection D^2 = 2n - r^2. in_range marks D^2 >= -4.
struct SingularityDatum {
    int n;
    int r;
    int D_selfint;
    bool in_range;
};

std::vector<SingularityDatum> singularity_solutions(int max_n);

// True iff a curve with C^2 > 0 and a point of multiplicity r cannot exist
// on an abelian surface: C^2 < r(r-1) + 1.
bool theta_obstruction(int Csq, int r);

// Elimination of cusp profiles on a blown-up abelian surface with one
// blowup: each boundary component of self-intersection -d comes from an
// elliptic curve with C^2 = d(d-1) and a point of multiplicity d, which the
// theta obstruction forbids as soon as d >= 2.
struct ComponentAnalysis {
    int d;           // boundary component is a (-d)-curve
    int n;           // C^2 = 2n for the curve downstairs
    int r;           // multiplicity at the blown-up point
    bool forbidden;  // theta obstruction fired
};

struct ProfileVerdict {
    std::vector<int> profile;
    bool survived;
    std::vector<ComponentAnalysis> components;
};

std::vector<ProfileVerdict> abelian_cusp_pipeline();

}  // namespace census
