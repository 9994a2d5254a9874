#include "census/actions.hpp"

#include <algorithm>
#include <stdexcept>

#include "census/lattice.hpp"

namespace census {

namespace {

bool unit_preserves(const FieldElement& u, const Lattice& L) {
    return is_ring_unit(u) && maps_into(u, L, L) && maps_into(inverse(u), L, L);
}

// Image of a curve under the diagonal affine map (w, z) -> (v w + c, v' z + d).
CurveOnProduct affine_curve_image(const FieldElement& v, const FieldElement& c,
                                  const FieldElement& vp, const FieldElement& d,
                                  const CurveOnProduct& e, const AbelianProduct& S) {
    switch (e.kind) {
        case CurveKind::graph_over_z: {
            FieldElement slope = v * e.alpha * inverse(vp);
            return canonical_curve(
                CurveOnProduct::graph_over_z(slope, v * e.a + c - slope * d), S);
        }
        case CurveKind::graph_over_w: {
            FieldElement slope = vp * e.alpha * inverse(v);
            return canonical_curve(
                CurveOnProduct::graph_over_w(slope, vp * e.a + d - slope * c), S);
        }
        case CurveKind::w_fiber:
            return canonical_curve(CurveOnProduct::w_fiber(v * e.a + c), S);
        case CurveKind::z_fiber:
            return canonical_curve(CurveOnProduct::z_fiber(vp * e.a + d), S);
    }
    throw std::logic_error("unhandled curve kind");
}

SurfacePoint affine_point_image(const FieldElement& v, const FieldElement& c,
                                const FieldElement& vp, const FieldElement& d,
                                const SurfacePoint& p, const AbelianProduct& S) {
    return {canonical_rep(v * p.w.value + c, S.lam_w),
            canonical_rep(vp * p.z.value + d, S.lam_z)};
}

std::vector<SurfacePoint> sorted_point_set(std::vector<SurfacePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const SurfacePoint& p, const SurfacePoint& q) {
                              return p == q;
                          }),
              pts.end());
    return pts;
}

}  // namespace

GroupElement identity_element(const AbelianProduct& S) {
    return {fe_one(S.field()), fe_zero(S.field()), fe_zero(S.field())};
}

bool element_well_defined(const GroupElement& g, const AbelianProduct& S) {
    return g.u.field == S.field() && g.c.field == S.field() &&
           g.t.field == S.field() && unit_preserves(g.u, S.lam_w);
}

GroupElement compose(const GroupElement& g, const GroupElement& h,
                     const AbelianProduct& S) {
    (void)S;
    return {g.u * h.u, g.u * h.c + g.c, g.t + h.t};
}

GroupElement inverse_element(const GroupElement& g, const AbelianProduct& S) {
    (void)S;
    FieldElement ui = inverse(g.u);
    return {ui, -(ui * g.c), -g.t};
}

GroupElement normalize_element(const GroupElement& g, const AbelianProduct& S) {
    return {g.u, canonical_rep(g.c, S.lam_w).value, canonical_rep(g.t, S.lam_z).value};
}

bool same_element(const GroupElement& g, const GroupElement& h,
                  const AbelianProduct& S) {
    return g.u == h.u && same_mod_lattice(g.c, h.c, S.lam_w) &&
           same_mod_lattice(g.t, h.t, S.lam_z);
}

bool is_identity_element(const GroupElement& g, const AbelianProduct& S) {
    return same_element(g, identity_element(S), S);
}

SurfacePoint apply_element(const GroupElement& g, const SurfacePoint& p,
                           const AbelianProduct& S) {
    return affine_point_image(g.u, g.c, fe_one(S.field()), g.t, p, S);
}

CurveOnProduct curve_image(const GroupElement& g, const CurveOnProduct& c,
                           const AbelianProduct& S) {
    return affine_curve_image(g.u, g.c, fe_one(S.field()), g.t, c, S);
}

std::vector<GroupElement> action_elements(const QuotientAction& A) {
    if (A.generators.size() != A.declared_orders.size())
        throw std::invalid_argument("one declared order per generator");
    if (A.generators.empty())
        throw std::invalid_argument("action needs at least one generator");
    std::size_t cap = 1;
    for (unsigned n : A.declared_orders) {
        if (n == 0)
            throw std::invalid_argument("declared orders must be positive");
        cap *= n;
    }
    for (const GroupElement& g : A.generators)
        if (!element_well_defined(g, A.surface))
            throw std::invalid_argument("generator does not act on the product");

    std::vector<GroupElement> elems{identity_element(A.surface)};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const GroupElement& g : A.generators) {
            GroupElement next =
                normalize_element(compose(g, elems[head], A.surface), A.surface);
            bool known =
                std::any_of(elems.begin(), elems.end(), [&](const GroupElement& e) {
                    return same_element(e, next, A.surface);
                });
            if (!known) {
                if (elems.size() == cap)
                    throw std::logic_error("closure exceeds the declared group order");
                elems.push_back(next);
            }
        }
    }
    return elems;
}

bool action_has_declared_shape(const QuotientAction& A) {
    if (A.generators.size() != A.declared_orders.size() || A.generators.empty())
        return false;
    const AbelianProduct& S = A.surface;
    for (const GroupElement& g : A.generators)
        if (!element_well_defined(g, S)) return false;
    for (std::size_t i = 0; i < A.generators.size(); ++i)
        for (std::size_t j = i + 1; j < A.generators.size(); ++j) {
            GroupElement gh = compose(A.generators[i], A.generators[j], S);
            GroupElement hg = compose(A.generators[j], A.generators[i], S);
            if (!same_element(gh, hg, S)) return false;
        }
    std::size_t cap = 1;
    for (std::size_t i = 0; i < A.generators.size(); ++i) {
        unsigned n = A.declared_orders[i];
        if (n == 0) return false;
        cap *= n;
        GroupElement power = identity_element(S);
        for (unsigned k = 1; k <= n; ++k) {
            power = normalize_element(compose(A.generators[i], power, S), S);
            if (k < n && n % k == 0 && is_identity_element(power, S)) return false;
        }
        if (!is_identity_element(power, S)) return false;
    }
    return action_elements(A).size() == cap;
}

bool action_is_free(const QuotientAction& A) {
    for (const GroupElement& e : action_elements(A)) {
        if (is_identity_element(e, A.surface)) continue;
        if (lattice_contains(e.t, A.surface.lam_z)) return false;
    }
    return true;
}

std::optional<OrbitReport> try_orbit_analysis(const UpstairsConfig& cfg,
                                              std::string* why) {
    const AbelianProduct& S = cfg.action.surface;
    if (cfg.curves.size() < 2)
        throw std::invalid_argument("configuration needs at least two curves");

    std::vector<CurveOnProduct> curves;
    curves.reserve(cfg.curves.size());
    for (const CurveOnProduct& c : cfg.curves)
        curves.push_back(canonical_curve(c, S));
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (same_curve(curves[i], curves[j], S))
                throw std::invalid_argument("configuration lists a curve twice");

    std::vector<GroupElement> elems = action_elements(cfg.action);
    for (const GroupElement& e : elems)
        for (const CurveOnProduct& c : curves) {
            CurveOnProduct img = curve_image(e, c, S);
            bool found =
                std::any_of(curves.begin(), curves.end(), [&](const CurveOnProduct& d) {
                    return same_curve(img, d, S);
                });
            if (!found) {
                if (why) *why = "action does not permute the configuration";
                return std::nullopt;
            }
        }

    std::vector<SurfacePoint> common;
    bool first = true;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            std::vector<SurfacePoint> pts =
                sorted_point_set(intersection_points(curves[i], curves[j], S));
            if (first) {
                common = pts;
                first = false;
            } else if (!(pts == common)) {
                if (why) *why = "pairwise intersection sets differ";
                return std::nullopt;
            }
        }

    OrbitReport rep;
    rep.points = common;
    rep.branches_per_point = curves.size();
    std::vector<bool> seen(common.size(), false);
    for (std::size_t i = 0; i < common.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit;
        for (const GroupElement& e : elems) {
            SurfacePoint q = apply_element(e, common[i], S);
            auto it = std::lower_bound(common.begin(), common.end(), q);
            if (it == common.end() || !(*it == q))
                throw std::logic_error("group orbit leaves the intersection locus");
            std::size_t idx = static_cast<std::size_t>(it - common.begin());
            if (!seen[idx]) {
                seen[idx] = true;
                orbit.push_back(idx);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        rep.orbits.push_back(std::move(orbit));
    }
    rep.transitive = rep.orbits.size() == 1;
    rep.downstairs_singular_points = rep.orbits.size();
    return rep;
}

OrbitReport orbit_analysis(const UpstairsConfig& cfg) {
    std::string why;
    std::optional<OrbitReport> rep = try_orbit_analysis(cfg, &why);
    if (!rep) throw std::invalid_argument(why);
    return *rep;
}

bool symmetry_well_defined(const Symmetry& s, const AbelianProduct& S) {
    return s.v.field == S.field() && s.c.field == S.field() &&
           s.vp.field == S.field() && s.d.field == S.field() &&
           unit_preserves(s.v, S.lam_w) && unit_preserves(s.vp, S.lam_z);
}

GroupElement conjugate_element(const Symmetry& s, const GroupElement& g,
                               const AbelianProduct& S) {
    FieldElement cw = s.v * g.c + (fe_one(S.field()) - g.u) * s.c;
    return normalize_element({g.u, cw, s.vp * g.t}, S);
}

CurveOnProduct symmetry_curve_image(const Symmetry& s, const CurveOnProduct& c,
                                    const AbelianProduct& S) {
    return affine_curve_image(s.v, s.c, s.vp, s.d, c, S);
}

SurfacePoint symmetry_point_image(const Symmetry& s, const SurfacePoint& p,
                                  const AbelianProduct& S) {
    return affine_point_image(s.v, s.c, s.vp, s.d, p, S);
}

}  // namespace census
