#pragma once

#include <Eigen/Dense>

#include "gff/lattice.hpp"
#include "gff/report.hpp"

namespace gff {

/// Exact covariance oracle for the DGFF on V_N. The killed-walk operator
/// I - P (P = simple random walk step with Dirichlet killing) diagonalizes in
/// the product-sine basis; its eigenvalues are
///   mu_{jk} = 1 - (cos(pi j/N) + cos(pi k/N)) / 2,   j,k = 1..N-1,
/// and G_N = (I - P)^{-1} is the reciprocal spectrum in the orthonormal sine
/// basis. Immutable after construction; safe to share across threads.
class GreenOperator {
 public:
  explicit GreenOperator(LatticeBox box);

  const LatticeBox& box() const { return box_; }

  /// mu_{jk} as a flat row-major array over j,k = 1..N-1.
  const Eigen::VectorXd& eigenvalues() const { return mu_; }

  /// G_N(x,y) via the spectral sum; O(N^2) per evaluation.
  double at(Site x, Site y) const;

  /// Full covariance matrix in site index order (guarded to N <= 64).
  Eigen::MatrixXd dense() const;

  /// Direct-solve oracle: inverse of (I - P) assembled entrywise.
  static Eigen::MatrixXd direct_solve(const LatticeBox& box);

  /// I - P = one quarter of the Dirichlet graph Laplacian (Eq.-level
  /// normalization of the field density).
  static Eigen::MatrixXd quarter_laplacian(const LatticeBox& box);

 private:
  LatticeBox box_;
  Eigen::VectorXd mu_;
  Eigen::MatrixXd sin_table_;  // sin(pi j x / N), (j-1) x (x-1)
};

struct GreenBoundConfig {
  double upper_ceiling = 2.0;       // ceiling for the global one-sided constant
  double bulk_ceiling = 3.0;        // ceiling for the two-sided bulk constant
  int pair_stride = 1;              // subsample stride over the pair grid
};

/// Smallest constants C making Lemma-2.6-style bounds hold over the sampled
/// pair grid: globally G <= g(log N - log(|x-y| v 1)) + C, and two-sided on
/// the bulk V_{N,rho}. Verdicts compare against the configured ceilings.
TestReport green_bound_check(const LatticeBox& box, double rho,
                             const GreenBoundConfig& cfg = {});

}  // namespace gff
