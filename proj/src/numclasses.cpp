#include "census/numclasses.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "census/geography.hpp"

namespace census {

const std::vector<BdFType>& bdf_types() {
    static const std::vector<BdFType> table = {
        {1, 2, 1, "Z/2", LambdaConstraint::any,
         "(w,z) -> (-w, z + b), b of order 2"},
        {2, 2, 2, "Z/2 x Z/2", LambdaConstraint::any,
         "(w,z) -> (-w, z + b); (w,z) -> (w + a, z + b'), a, b' of order 2"},
        {3, 4, 1, "Z/4", LambdaConstraint::gaussian_i,
         "(w,z) -> (i w, z + b), b of order 4"},
        {4, 4, 2, "Z/4 x Z/2", LambdaConstraint::gaussian_i,
         "(w,z) -> (i w, z + b); (w,z) -> (w + a, z + b'), orders 4 and 2"},
        {5, 3, 1, "Z/3", LambdaConstraint::eisenstein_rho,
         "(w,z) -> (rho w, z + b), b of order 3"},
        {6, 3, 3, "Z/3 x Z/3", LambdaConstraint::eisenstein_rho,
         "(w,z) -> (rho w, z + b); (w,z) -> (w + a, z + b'), orders 3 and 3"},
        {7, 6, 1, "Z/6", LambdaConstraint::eisenstein_rho,
         "(w,z) -> (-rho w, z + b), b of order 6"},
    };
    return table;
}

int class_self_intersection(const NumClass& c) {
    if (c.k1 < 1 || c.k2 < 1)
        throw std::invalid_argument("numerical class needs positive parts");
    return 2 * c.k1 * c.k2;
}

std::pair<int, int> fiber_degrees(const NumClass& c) {
    if (c.k1 < 1 || c.k2 < 1)
        throw std::invalid_argument("numerical class needs positive parts");
    // C.A = (k2/t) A.B = k2 s, C.B = (k1/s) A.B = k1 t
    return {c.k2 * c.type.s, c.k1 * c.type.t};
}

int class_intersection(const NumClass& c, const NumClass& d) {
    if (c.type.id != d.type.id)
        throw std::invalid_argument("classes live on different surfaces");
    return c.k1 * d.k2 + c.k2 * d.k1;
}

std::vector<NumClass> enumerate_candidates(const BdFType& type, int Csq) {
    if (Csq <= 0 || Csq % 2 != 0)
        throw std::invalid_argument("self-intersection must be positive and even");
    std::vector<NumClass> out;
    const int prod = Csq / 2;
    for (int k1 = 1; k1 <= prod; ++k1) {
        if (prod % k1 == 0) out.push_back({k1, prod / k1, type});
    }
    return out;
}

namespace {

std::string int_detail(const char* lhs, int got, const char* rel, int want) {
    std::ostringstream os;
    os << lhs << " = " << got << " " << rel << " " << want;
    return os.str();
}

}  // namespace

FilterVerdict run_filters(const NumClass& c, int r, CuspCase cusp_case,
                          bool pair_case) {
    if (r < 2) throw std::invalid_argument("filters expect multiplicity >= 2");
    if (pair_case && !(cusp_case == CuspCase::two && r == 2))
        throw std::invalid_argument("pair case means two cusps of multiplicity 2");

    FilterVerdict v{c, r, cusp_case, pair_case, {}, true};
    const bool strict = (cusp_case == CuspCase::one);
    const auto [dA, dB] = fiber_degrees(c);

    auto emit = [&](std::string id, bool passed, bool strict_applied,
                    bool equality_flagged, std::string detail) {
        v.results.push_back({std::move(id), passed, strict_applied,
                             equality_flagged, std::move(detail)});
        if (!passed) v.survives_numerics = false;
        return passed;
    };

    // F1: the covering group permutes the r local branches transitively
    if (!emit("cusp-multiplicity-divides-group-order",
              c.type.group_order() % r == 0, false, false,
              int_detail("|G| mod r", c.type.group_order() % r, "vs", 0)))
        return v;

    // F2: the class meets the B-fiber at least r times (more than r when the
    // cusp curve is unique, since the branch point is not the whole picture)
    {
        const bool ok = strict ? dB > r : dB >= r;
        if (!emit("fiber-degree-bound-b", ok, strict,
                  !strict && ok && dB == r, int_detail("C.B", dB, "vs r =", r)))
            return v;
    }

    // F3: same bound against the A-fiber
    {
        const bool ok = strict ? dA > r : dA >= r;
        if (!emit("fiber-degree-bound-a", ok, strict,
                  !strict && ok && dA == r, int_detail("C.A", dA, "vs r =", r)))
            return v;
    }

    // F4: two cusps of multiplicity 2 force both classes to (1,1), which
    // meet with total multiplicity 2; the common blown-up point alone needs 4
    if (pair_case) {
        const NumClass other{1, 1, c.type};
        const int pair_int = class_intersection(c, other);
        if (!emit("two-cusp-pair-intersection", pair_int >= 4, false, false,
                  int_detail("C1.C2", pair_int, "vs", 4)))
            return v;
    }

    // F5: the r branches are permuted transitively upstairs, so r divides
    // both fiber degrees
    emit("component-divisibility", dB % r == 0 && dA % r == 0, false, false,
         int_detail("C.B mod r", dB % r, ", C.A mod r", dA % r));
    return v;
}

bool numerical_automorphism_exists(const BdFType& type,
                                   const std::pair<Rat, Rat>& imA,
                                   const std::pair<Rat, Rat>& imB) {
    // In the basis e1 = (1/s)A, e2 = (1/t)B: A = s e1, B = t e2, so
    // (1/s) im(A) = imA.first e1 + imA.second (t/s) e2 and
    // (1/t) im(B) = imB.first (s/t) e1 + imB.second e2.
    const Rat s{type.s}, t{type.t};
    return is_integer(imA.first) && is_integer(imA.second * t / s) &&
           is_integer(imB.first * s / t) && is_integer(imB.second);
}

std::vector<CensusCase> admissible_census_cases() {
    std::vector<CensusCase> cases;
    for (const auto& profile : boundary_profiles(4)) {
        // a quotient with positive first Betti number has one or two cusps
        if (profile.size() > 2) continue;
        const bool pair = profile.size() == 2 && profile[0] == -2 &&
                          profile[1] == -2;
        for (int d : profile) {
            const int r = -d;
            if (r < 2) continue;  // a (-1)-component descends from a smooth curve
            cases.push_back({profile.size() == 1 ? CuspCase::one : CuspCase::two,
                             r, r * (r - 1), pair, profile});
            if (pair) break;  // both components give the same analysis
        }
    }
    return cases;
}

EliminationCensus elimination_census() {
    EliminationCensus census;
    for (const auto& kase : admissible_census_cases()) {
        for (const auto& type : bdf_types()) {
            CensusRow row{type, kase, {}};
            for (const auto& cand : enumerate_candidates(type, kase.Csq)) {
                auto verdict =
                    run_filters(cand, kase.r, kase.cusp_case, kase.pair_case);
                if (verdict.survives_numerics)
                    census.survivors.push_back(cand);
                row.candidates.push_back(std::move(verdict));
            }
            census.rows.push_back(std::move(row));
        }
    }
    return census;
}

}  // namespace census
