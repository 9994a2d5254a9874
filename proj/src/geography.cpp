#include "census/geography.hpp"

#include <algorithm>

namespace census {

SurfacePair::SurfacePair(MinimalType t, int k, std::vector<int> boundary,
                         std::string group)
    : minimal_type(t),
      blowup_count(k),
      boundary_selfints(std::move(boundary)),
      group_label(std::move(group)) {
    if (blowup_count < 0) throw std::invalid_argument("negative blowup count");
    for (int d : boundary_selfints)
        if (d >= 0)
            throw std::invalid_argument("boundary self-intersections must be negative");
    std::sort(boundary_selfints.begin(), boundary_selfints.end());
}

std::pair<int, int> log_chern_numbers(const SurfacePair& p) {
    int c1sq, c2;
    switch (p.minimal_type) {
        case MinimalType::abelian:
        case MinimalType::bielliptic:
            c1sq = 0, c2 = 0;
            break;
        case MinimalType::k3:
            c1sq = 0, c2 = 24;
            break;
        case MinimalType::enriques:
            c1sq = 0, c2 = 12;
            break;
        default:
            throw std::invalid_argument("unsupported minimal type for log Chern numbers");
    }
    int sum = 0;
    for (int d : p.boundary_selfints) sum += d;
    return {(c1sq - p.blowup_count) - sum, c2 + p.blowup_count};
}

std::vector<std::vector<int>> boundary_profiles(int total) {
    if (total <= 0) throw std::invalid_argument("total must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    // partitions of total with nonincreasing parts; parts map to -d entries
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            std::vector<int> profile;
            profile.reserve(parts.size());
            for (int d : parts) profile.push_back(-d);
            std::sort(profile.begin(), profile.end());
            out.push_back(std::move(profile));
            return;
        }
        for (int d = std::min(remaining, max_part); d >= 1; --d) {
            parts.push_back(d);
            self(self, remaining - d, d);
            parts.pop_back();
        }
    };
    rec(rec, total, total);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SingularityDatum> singularity_solutions(int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be positive");
    std::vector<SingularityDatum> out;
    for (int n = 1; n <= max_n; ++n) {
        // r = (1 + sqrt(1+8n))/2 must be a positive integer
        int disc = 1 + 8 * n;
        int s = 1;
        while (s * s < disc) ++s;
        if (s * s != disc || (1 + s) % 2 != 0) continue;
        int r = (1 + s) / 2;
        int dsq = 2 * n - r * r;
        out.push_back({n, r, dsq, dsq >= -4});
    }
    return out;
}

bool theta_obstruction(int Csq, int r) {
    if (Csq <= 0) throw std::invalid_argument("theta obstruction requires C^2 > 0");
    return Csq < r * (r - 1) + 1;
}

std::vector<ProfileVerdict> abelian_cusp_pipeline() {
    std::vector<ProfileVerdict> out;
    for (const auto& profile : boundary_profiles(4)) {
        ProfileVerdict verdict{profile, true, {}};
        for (int dd : profile) {
            int d = -dd;
            // D^2 = 2n - r^2 = -d together with r^2 - r = 2n gives r = d
            ComponentAnalysis comp{d, d * (d - 1) / 2, d, false};
            if (d >= 2) {
                comp.forbidden = theta_obstruction(2 * comp.n, comp.r);
                if (comp.forbidden) verdict.survived = false;
            }
            verdict.components.push_back(comp);
        }
        out.push_back(std::move(verdict));
    }
    return out;
}

}  // namespace census
