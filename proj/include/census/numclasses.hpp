#pragma once

#include <string>
#include <vector>

#include "census/rational.hpp"

namespace census {

enum class LambdaConstraint { any, gaussian_i, eisenstein_rho };

// One of the seven quotient types (G = Z/s x Z/t acting on a product of two
// elliptic curves, t = 1 for cyclic G). The first factor's multiplier must
// be a special unit for s in {3, 4, 6}.
struct BdFType {
    int id;  // 1..7
    int s;
    int t;
    std::string group_name;
    LambdaConstraint lambda;
    std::string action_description;

    int group_order() const { return s * t; }
};

const std::vector<BdFType>& bdf_types();

// The numerical class (k1/s) A + (k2/t) B on the quotient, where A, B are the
// images of the two fiber classes; A.B = |G| and (1/s)A, (1/t)B form a
// Z-basis of the numerical lattice.
struct NumClass {
    int k1;
    int k2;
    BdFType type;
};

// C^2 = 2 k1 k2
int class_self_intersection(const NumClass& c);

// (C.A, C.B) = (k2 s, k1 t)
std::pair<int, int> fiber_degrees(const NumClass& c);

// intersection of two classes on the same type: k1 k2' + k2 k1'
int class_intersection(const NumClass& c, const NumClass& d);

// all (k1, k2) with k1, k2 >= 1 and 2 k1 k2 = Csq
std::vector<NumClass> enumerate_candidates(const BdFType& type, int Csq);

enum class CuspCase { one, two };

struct FilterResult {
    std::string id;         // claim key, e.g. "fiber-degree-bound-b"
    bool passed;
    bool strict_applied;    // the one-cusp strict form was used
    bool equality_flagged;  // passed with equality in two-cusp mode
    std::string detail;
};

struct FilterVerdict {
    NumClass cls;
    int r;
    CuspCase cusp_case;
    bool pair_case;  // the two-cusp (-2,-2) profile with two r=2 curves
    std::vector<FilterResult> results;
    bool survives_numerics;
};

// Filters, in order:
//   F1 r divides |G|
//   F2 C.B >= r (strict when one cusp)
//   F3 C.A >= r (strict when one cusp)
//   F4 (pair case only) the two r=2 curves must meet with multiplicity 4 at
//      the blown-up point, but their classes force C1.C2 = 2
//   F5 r divides C.B and C.A (the preimage has r components permuted
//      transitively, so each fiber degree splits evenly)
FilterVerdict run_filters(const NumClass& c, int r, CuspCase cusp_case,
                          bool pair_case = false);

// Does a numerical automorphism exist with A -> imA, B -> imB (coefficients
// on (A, B))? It must map the basis vectors (1/s)A, (1/t)B to integral
// classes.
bool numerical_automorphism_exists(const BdFType& type,
                                   const std::pair<Rat, Rat>& imA,
                                   const std::pair<Rat, Rat>& imB);

// The admissible (cusp pattern, multiplicity, self-intersection) cases for a
// bielliptic minimal model, derived from the boundary profiles of total 4
// with at most two cusps and the singularity quadratic.
struct CensusCase {
    CuspCase cusp_case;
    int r;
    int Csq;
    bool pair_case;
    std::vector<int> profile;
};

std::vector<CensusCase> admissible_census_cases();

struct CensusRow {
    BdFType type;
    CensusCase kase;
    std::vector<FilterVerdict> candidates;
};

struct EliminationCensus {
    std::vector<CensusRow> rows;
    // (type id, k1, k2) of every class that survives the numerical filters
    std::vector<NumClass> survivors;
};

EliminationCensus elimination_census();

}  // namespace census
