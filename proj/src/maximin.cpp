#include "diamond/maximin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diamond {

namespace {

double family_min(std::span<const AffineLine> family, double lam) {
    double m = family[0].slope * lam + family[0].intercept;
    for (std::size_t i = 1; i < family.size(); ++i)
        m = std::min(m, family[i].slope * lam + family[i].intercept);
    return m;
}

} // namespace

MaximinResult maximin(std::span<const AffineLine> family) {
    if (family.empty())
        throw std::invalid_argument("maximin: empty affine family");
    for (const auto& l : family)
        if (!std::isfinite(l.slope) || !std::isfinite(l.intercept))
            throw std::invalid_argument("maximin: non-finite line coefficient");

    // Deduplicate identical lines so a pair of copies cannot produce a 0/0
    // intersection candidate.
    std::vector<AffineLine> lines(family.begin(), family.end());
    std::sort(lines.begin(), lines.end(), [](const AffineLine& a, const AffineLine& b) {
        return a.slope != b.slope ? a.slope < b.slope : a.intercept < b.intercept;
    });
    lines.erase(std::unique(lines.begin(), lines.end(),
                            [](const AffineLine& a, const AffineLine& b) {
                                return a.slope == b.slope && a.intercept == b.intercept;
                            }),
                lines.end());

    std::vector<double> candidates = {0.0, 1.0};
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double ds = lines[i].slope - lines[j].slope;
            if (std::abs(ds) < 1e-12)
                continue; // parallel
            const double lam = (lines[j].intercept - lines[i].intercept) / ds;
            if (lam > 0.0 && lam < 1.0)
                candidates.push_back(lam);
        }
    }
    std::sort(candidates.begin(), candidates.end());

    double vmax = -std::numeric_limits<double>::infinity();
    for (double lam : candidates)
        vmax = std::max(vmax, family_min(lines, lam));

    // Smallest lambda1 that attains the maximum (within a tie tolerance that
    // absorbs candidate-evaluation roundoff).
    const double tie = 1e-12 * std::max(1.0, std::abs(vmax));
    for (double lam : candidates) {
        const double v = family_min(lines, lam);
        if (v >= vmax - tie)
            return {lam, v};
    }
    return {0.0, vmax}; // unreachable
}

} // namespace diamond
