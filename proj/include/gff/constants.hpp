#pragma once

#include <cmath>

namespace gff {

/// g = 2/pi links the centering sequence to the Green function growth
/// G_N(x,x) = g log N + O(1).
inline constexpr double kG = 2.0 / M_PI;

/// alpha = 2/sqrt(g) = sqrt(2*pi): decay rate of the limit intensity e^{-alpha h}.
inline const double kAlpha = std::sqrt(2.0 * M_PI);

}  // namespace gff
