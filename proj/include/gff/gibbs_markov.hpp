#pragma once

#include "gff/field.hpp"
#include "gff/lattice.hpp"

namespace gff {

/// Gibbs-Markov decomposition h = h^c + h^f. The coarse field is the
/// conditional expectation given the sub-box boundary values (the discrete
/// harmonic extension inside each sub-box); the fine field vanishes on the
/// sub-box boundaries and consists of independent DGFFs on V_{N/K}.
struct CoarseFineSplit {
  FieldSample coarse;
  FieldSample fine;
  SubBoxGrid grid;
};

CoarseFineSplit gibbs_markov_split(const FieldSample& h, int k);

/// Discrete Poisson kernel of one sub-box: evaluates the coarse field at a
/// single site as a dot product with the sub-box boundary values. Used by the
/// Monte Carlo coarse-covariance oracle, where extending the whole field per
/// replicate would dominate the runtime. Agrees with gibbs_markov_split to
/// solver tolerance.
class CoarsePointKernel {
 public:
  /// site must lie strictly inside sub-box sub_i of the (N, K) tiling.
  CoarsePointKernel(const LatticeBox& box, int k, Site site);

  double eval(const FieldSample& h) const;

 private:
  std::vector<Site> boundary_;
  std::vector<double> weights_;
};

}  // namespace gff
