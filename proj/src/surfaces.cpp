#include "census/surfaces.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace census {

namespace {

bool invertible_between(const FieldElement& alpha, const Lattice& src,
                        const Lattice& dst) {
    return !alpha.is_zero() && maps_into(alpha, src, dst) &&
           maps_into(inverse(alpha), dst, src);
}

std::size_t to_size(const Int& n) { return n.convert_to<std::size_t>(); }

}  // namespace

bool curve_well_defined(const CurveOnProduct& c, const AbelianProduct& S) {
    switch (c.kind) {
        case CurveKind::graph_over_z:
            return maps_into(c.alpha, S.lam_z, S.lam_w);
        case CurveKind::graph_over_w:
            return maps_into(c.alpha, S.lam_w, S.lam_z);
        case CurveKind::w_fiber:
        case CurveKind::z_fiber:
            return true;
    }
    return false;
}

CurveOnProduct canonical_curve(const CurveOnProduct& c, const AbelianProduct& S) {
    if (!curve_well_defined(c, S))
        throw std::invalid_argument("curve does not descend to the product");
    switch (c.kind) {
        case CurveKind::w_fiber:
            return CurveOnProduct::w_fiber(canonical_rep(c.a, S.lam_w).value);
        case CurveKind::z_fiber:
            return CurveOnProduct::z_fiber(canonical_rep(c.a, S.lam_z).value);
        case CurveKind::graph_over_z: {
            if (c.alpha.is_zero())
                return CurveOnProduct::w_fiber(canonical_rep(c.a, S.lam_w).value);
            return CurveOnProduct::graph_over_z(c.alpha,
                                                canonical_rep(c.a, S.lam_w).value);
        }
        case CurveKind::graph_over_w: {
            if (c.alpha.is_zero())
                return CurveOnProduct::z_fiber(canonical_rep(c.a, S.lam_z).value);
            if (invertible_between(c.alpha, S.lam_w, S.lam_z)) {
                // {z = alpha w + a} = {w = alpha^{-1} z - alpha^{-1} a}
                FieldElement inv = inverse(c.alpha);
                return CurveOnProduct::graph_over_z(
                    inv, canonical_rep(-(inv * c.a), S.lam_w).value);
            }
            return CurveOnProduct::graph_over_w(c.alpha,
                                                canonical_rep(c.a, S.lam_z).value);
        }
    }
    throw std::logic_error("unreachable curve kind");
}

bool same_curve(const CurveOnProduct& c, const CurveOnProduct& d,
                const AbelianProduct& S) {
    return canonical_curve(c, S) == canonical_curve(d, S);
}

bool point_on_curve(const CurveOnProduct& c, const AbelianProduct& S,
                    const FieldElement& w, const FieldElement& z) {
    switch (c.kind) {
        case CurveKind::graph_over_z:
            return lattice_contains(w - (c.alpha * z + c.a), S.lam_w);
        case CurveKind::graph_over_w:
            return lattice_contains(z - (c.alpha * w + c.a), S.lam_z);
        case CurveKind::w_fiber:
            return lattice_contains(w - c.a, S.lam_w);
        case CurveKind::z_fiber:
            return lattice_contains(z - c.a, S.lam_z);
    }
    return false;
}

std::vector<LatticePoint> division_kernel(const FieldElement& delta,
                                          const Lattice& src, const Lattice& dst) {
    if (delta.is_zero()) throw std::invalid_argument("division_kernel: zero multiplier");
    Int m = lattice_index(scaled(delta, src), dst);
    FieldElement inv = inverse(delta);
    FieldElement u1 = inv * dst.w1;
    FieldElement u2 = inv * dst.w2;
    std::size_t mm = to_size(m);
    std::set<std::pair<Rat, Rat>> seen;
    std::vector<LatticePoint> out;
    // the quotient group has order m, so exponents below m exhaust it
    for (std::size_t i = 0; i < mm; ++i)
        for (std::size_t j = 0; j < mm; ++j) {
            FieldElement v = fe_rat(Rat(i), src.field()) * u1 +
                             fe_rat(Rat(j), src.field()) * u2;
            LatticePoint p = canonical_rep(v, src);
            if (seen.insert({p.value.a, p.value.b}).second) out.push_back(p);
        }
    if (out.size() != mm)
        throw std::logic_error("division_kernel: wrong coset count");
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Solved {
    Int count;
    std::vector<SurfacePoint> points;
};

SurfacePoint make_point(const FieldElement& w, const FieldElement& z,
                        const AbelianProduct& S) {
    return {canonical_rep(w, S.lam_w), canonical_rep(z, S.lam_z)};
}

void sort_dedup(std::vector<SurfacePoint>& pts, const Int& expect) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (Int(pts.size()) != expect)
        throw std::logic_error("intersection point count mismatch");
}

// Common core: solutions (w, z) with delta*z = c mod L_w, w = alpha*z + a,
// where curve parameters come from two graphs over z.
Solved solve_same_coordinate(const FieldElement& alpha1, const FieldElement& a1,
                             const FieldElement& delta, const FieldElement& c,
                             const AbelianProduct& S) {
    Int count = lattice_index(scaled(delta, S.lam_z), S.lam_w);
    FieldElement z0 = inverse(delta) * c;
    std::vector<SurfacePoint> pts;
    for (const auto& k : division_kernel(delta, S.lam_z, S.lam_w)) {
        FieldElement z = z0 + k.value;
        pts.push_back(make_point(alpha1 * z + a1, z, S));
    }
    sort_dedup(pts, count);
    return {count, pts};
}

Solved solve_pair(const CurveOnProduct& c1, const CurveOnProduct& c2,
                  const AbelianProduct& S) {
    const QuadraticField& F = S.field();
    // mirror product used to reuse the graph_over_z logic for graphs over w
    AbelianProduct M(S.lam_z, S.lam_w);

    auto mirrored = [](Solved s) {
        for (auto& p : s.points) std::swap(p.w, p.z);
        std::sort(s.points.begin(), s.points.end());
        return s;
    };

    switch (c1.kind) {
        case CurveKind::w_fiber:
            switch (c2.kind) {
                case CurveKind::w_fiber:
                    return {Int(0), {}};  // distinct parallel fibers
                case CurveKind::z_fiber:
                    return {Int(1), {make_point(c1.a, c2.a, S)}};
                default:
                    return solve_pair(c2, c1, S);
            }
        case CurveKind::z_fiber:
            switch (c2.kind) {
                case CurveKind::z_fiber:
                    return {Int(0), {}};
                case CurveKind::w_fiber:
                    return {Int(1), {make_point(c2.a, c1.a, S)}};
                default:
                    return solve_pair(c2, c1, S);
            }
        case CurveKind::graph_over_z:
            switch (c2.kind) {
                case CurveKind::z_fiber: {
                    // one transverse point (alpha c + a, c)
                    return {Int(1), {make_point(c1.alpha * c2.a + c1.a, c2.a, S)}};
                }
                case CurveKind::w_fiber: {
                    // alpha z = c - a mod L_w; canonical forms have alpha != 0
                    return solve_same_coordinate(c1.alpha, c1.a, c1.alpha,
                                                 c2.a - c1.a, S);
                }
                case CurveKind::graph_over_z: {
                    if (c1.alpha == c2.alpha) return {Int(0), {}};  // parallel
                    FieldElement delta = c1.alpha - c2.alpha;
                    return solve_same_coordinate(c1.alpha, c1.a, delta,
                                                 c2.a - c1.a, S);
                }
                case CurveKind::graph_over_w: {
                    // w = alpha1 z + a1, z = alpha2 w + a2;
                    // (1 - alpha1 alpha2) w = alpha1 a2 + a1 mod L_w
                    FieldElement delta = fe_one(F) - c1.alpha * c2.alpha;
                    if (delta.is_zero())
                        throw std::logic_error(
                            "cross graphs with inverse slopes survived "
                            "canonicalization");
                    Int count = lattice_index(scaled(delta, S.lam_w), S.lam_w);
                    FieldElement w0 = inverse(delta) * (c1.alpha * c2.a + c1.a);
                    std::vector<SurfacePoint> pts;
                    for (const auto& k : division_kernel(delta, S.lam_w, S.lam_w)) {
                        FieldElement w = w0 + k.value;
                        pts.push_back(make_point(w, c2.alpha * w + c2.a, S));
                    }
                    sort_dedup(pts, count);
                    return {count, pts};
                }
            }
            break;
        case CurveKind::graph_over_w:
            switch (c2.kind) {
                case CurveKind::graph_over_w: {
                    if (c1.alpha == c2.alpha) return {Int(0), {}};
                    CurveOnProduct m1 = CurveOnProduct::graph_over_z(c1.alpha, c1.a);
                    CurveOnProduct m2 = CurveOnProduct::graph_over_z(c2.alpha, c2.a);
                    return mirrored(solve_pair(m1, m2, M));
                }
                default: {
                    CurveOnProduct m1 = CurveOnProduct::graph_over_z(c1.alpha, c1.a);
                    CurveOnProduct m2 = c2;
                    switch (c2.kind) {
                        case CurveKind::w_fiber:
                            m2 = CurveOnProduct::z_fiber(c2.a);
                            break;
                        case CurveKind::z_fiber:
                            m2 = CurveOnProduct::w_fiber(c2.a);
                            break;
                        case CurveKind::graph_over_z:
                            m2 = CurveOnProduct::graph_over_w(c2.alpha, c2.a);
                            break;
                        default:
                            break;
                    }
                    return mirrored(solve_pair(m1, m2, M));
                }
            }
    }
    throw std::logic_error("unreachable intersection case");
}

Solved intersect(const CurveOnProduct& c1, const CurveOnProduct& c2,
                 const AbelianProduct& S) {
    CurveOnProduct n1 = canonical_curve(c1, S);
    CurveOnProduct n2 = canonical_curve(c2, S);
    if (n1 == n2) throw std::invalid_argument("self-intersection undefined here");
    return solve_pair(n1, n2, S);
}

}  // namespace

Int intersection_number(const CurveOnProduct& c1, const CurveOnProduct& c2,
                        const AbelianProduct& S) {
    return intersect(c1, c2, S).count;
}

std::vector<SurfacePoint> intersection_points(const CurveOnProduct& c1,
                                              const CurveOnProduct& c2,
                                              const AbelianProduct& S) {
    return intersect(c1, c2, S).points;
}

CurveOnProduct translate_curve(const CurveOnProduct& c, const FieldElement& tw,
                               const FieldElement& tz, const AbelianProduct& S) {
    CurveOnProduct out = c;
    switch (c.kind) {
        case CurveKind::graph_over_z:
            out.a = c.a + tw - c.alpha * tz;
            break;
        case CurveKind::graph_over_w:
            out.a = c.a + tz - c.alpha * tw;
            break;
        case CurveKind::w_fiber:
            out.a = c.a + tw;
            break;
        case CurveKind::z_fiber:
            out.a = c.a + tz;
            break;
    }
    return canonical_curve(out, S);
}

std::vector<FieldElement> unit_slopes(const SlopeDomain& D) {
    if (D.kind == SlopeDomainKind::generic)
        return {fe_one(D.field), -fe_one(D.field)};
    return ring_units(D.field);
}

std::vector<FieldElement> unit_slopes(const Lattice& L) {
    for (const auto& f : {QuadraticField::eisenstein(), QuadraticField::gaussian()})
        if (L.field() == f && L == std_lattice(f)) return ring_units(f);
    throw std::invalid_argument("unit_slopes: unsupported lattice");
}

GoodConfigurationCensus good_configuration_search(const SlopeDomain& D) {
    GoodConfigurationCensus out;
    out.domain = D.kind;
    std::vector<FieldElement> units = unit_slopes(D);

    auto is_unit_slope = [&](const FieldElement& x) {
        return std::find(units.begin(), units.end(), x) != units.end();
    };

    FieldElement o = fe_zero(D.field);
    auto config_for = [&](std::size_t i, std::size_t j) {
        return Configuration{{CurveOnProduct::z_fiber(o),
                              CurveOnProduct::graph_over_z(o, o),
                              CurveOnProduct::graph_over_z(units[i], o),
                              CurveOnProduct::graph_over_z(units[j], o)}};
    };

    // slope pairs (i < j) whose configuration {z=0, w=0, w=a_i z, w=a_j z}
    // turned out good
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i + 1; j < units.size(); ++j) {
            bool good;
            if (D.kind == SlopeDomainKind::generic) {
                // no concrete lattice to intersect on; the unit-difference
                // criterion is the definition in this symbolic case
                good = is_unit_slope(units[i] - units[j]);
            } else {
                AbelianProduct S(std_lattice(D.field), std_lattice(D.field));
                SurfacePoint origin{canonical_rep(o, S.lam_w),
                                    canonical_rep(o, S.lam_z)};
                Configuration cfg = config_for(i, j);
                good = true;
                for (std::size_t s = 0; s < cfg.curves.size() && good; ++s)
                    for (std::size_t t = s + 1; t < cfg.curves.size() && good; ++t) {
                        if (intersection_number(cfg.curves[s], cfg.curves[t], S) != 1)
                            good = false;
                        auto pts = intersection_points(cfg.curves[s], cfg.curves[t], S);
                        if (pts.size() != 1 || !(pts[0] == origin)) good = false;
                    }
            }
            if (good) {
                pairs.push_back({i, j});
                out.configurations.push_back(config_for(i, j));
            }
        }

    // equivalence: unit rescaling of w sends {a1, a2} to {u a1, u a2};
    // coordinate swap sends it to {a1^{-1}, a2^{-1}}
    auto pair_index = [&](FieldElement x, FieldElement y) -> std::size_t {
        auto find = [&](const FieldElement& v) {
            for (std::size_t k = 0; k < units.size(); ++k)
                if (units[k] == v) return k;
            return units.size();
        };
        std::size_t i = find(x), j = find(y);
        if (i > j) std::swap(i, j);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k] == std::make_pair(i, j)) return k;
        return pairs.size();
    };

    std::vector<std::size_t> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto merge = [&](std::size_t x, std::size_t y) {
        if (x < pairs.size() && y < pairs.size()) parent[root(x)] = root(y);
    };
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        FieldElement a1 = units[pairs[k].first], a2 = units[pairs[k].second];
        for (const auto& u : units) merge(k, pair_index(u * a1, u * a2));
        merge(k, pair_index(inverse(a1), inverse(a2)));
    }

    std::map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t k = 0; k < pairs.size(); ++k) buckets[root(k)].push_back(k);
    for (auto& [r, members] : buckets) {
        std::sort(members.begin(), members.end());
        out.classes.push_back({members, out.configurations[members.front()]});
    }
    return out;
}

}  // namespace census
