#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "gff/lattice.hpp"
#include "gff/rng.hpp"

namespace gff {

/// One DGFF realization on V_N with provenance. Boundary values are implicit
/// zeros. values[idx] is the height at box.site(idx).
struct FieldSample {
  LatticeBox box{2};
  Eigen::VectorXd values;
  std::uint64_t seed = 0;
  std::string generator;

  double at(Site s) const { return box.contains(s) ? values[box.index(s)] : 0.0; }
};

/// m_N = 2 sqrt(g) log N - (3/4) sqrt(g) log log N, evaluated for real
/// arguments (formula-level entry point; requires x > 1).
double centering_mn_real(double x);

/// Centering sequence at integer N >= 3.
double centering_mn(int n);

/// Samples h = sum_jk xi_jk / sqrt(mu_jk) * psi_jk via a fast 2D sine
/// transform: one draw costs O(N^2 log N). Deterministic in (N, seed).
class SpectralSampler {
 public:
  explicit SpectralSampler(LatticeBox box);
  FieldSample sample(std::uint64_t seed) const;
  const LatticeBox& box() const { return box_; }

 private:
  LatticeBox box_;
  Eigen::VectorXd inv_sqrt_mu_;
};

FieldSample sample_field(const LatticeBox& box, std::uint64_t seed);

/// Dense-Cholesky law oracle, capped at N <= 16.
class CholeskySampler {
 public:
  explicit CholeskySampler(LatticeBox box);
  FieldSample sample(std::uint64_t seed) const;

 private:
  LatticeBox box_;
  Eigen::MatrixXd chol_;
};

/// Gaussian interpolation h = sqrt(1-s) hA + sqrt(s) hB with s = t/(g log N).
/// Exact in law when hA, hB are independent DGFF samples on the same box.
FieldSample interpolate(const FieldSample& ha, const FieldSample& hb, double t);

}  // namespace gff
