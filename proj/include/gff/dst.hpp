#pragma once

#include <Eigen/Dense>

namespace gff {

/// 2D type-I discrete sine transform of an m x m array (unnormalized FFTW
/// RODFT00 convention: out(x) = 4 * sum in_{jk} sin(pi j x1/(m+1)) sin(...)).
/// Thread-safe: plans are cached per size under a lock, execution is
/// concurrent. Arrays are row-major contiguous of length m*m.
void dst2d(const double* in, double* out, int m);

inline void dst2d(const Eigen::VectorXd& in, Eigen::VectorXd& out, int m) {
  out.resize(static_cast<long>(m) * m);
  dst2d(in.data(), out.data(), m);
}

}  // namespace gff
