#pragma once

#include <span>
#include <vector>

namespace diamond {

/// One affine term f(lambda1) = slope*lambda1 + intercept, bits/s/Hz.
struct AffineLine {
    double slope = 0.0;
    double intercept = 0.0;
};

/// A finite family of affine terms whose pointwise minimum is maximized.
using AffineFamily = std::vector<AffineLine>;

struct MaximinResult {
    double lambda1 = 0.0;
    double value = 0.0;
};

/// Exact solution of max over lambda1 in [0,1] of min_j f_j(lambda1).
///
/// The minimum of affine functions is piecewise-affine and concave, so the
/// maximum is attained at an interval endpoint or at an intersection of two
/// lines; all such candidates are enumerated. Ties are broken toward the
/// smallest lambda1. Throws std::invalid_argument for an empty family or
/// non-finite coefficients.
MaximinResult maximin(std::span<const AffineLine> family);

} // namespace diamond
