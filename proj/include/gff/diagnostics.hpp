#pragma once

#include <vector>

#include "gff/extremal.hpp"
#include "gff/field.hpp"
#include "gff/report.hpp"

namespace gff {

/// Level-set geometry summary across samples.
struct LevelSetReport {
  double lambda = 0.0;
  double mean_size = 0.0;
  double containment_frequency = 0.0;   // e^{c lambda} <= |Gamma| <= e^{C lambda}
  double intermediate_pair_frequency = 0.0;  // some pair at distance in [r, N/r]
  double bulk_exclusion_frequency = 0.0;     // Gamma \ V_{N,rho} nonempty
  std::vector<long> separation_histogram;    // dyadic distance bands 2^k..2^{k+1}
};

struct LevelSetConfig {
  double c_low = 0.1;
  double c_high = 3.0;
  int band_r = 8;
  double min_containment = 0.9;      // verdict thresholds
  double max_bulk_exclusion = 0.1;
};

std::pair<LevelSetReport, TestReport> level_set_diagnostics(
    const std::vector<FieldSample>& samples, double lambda, double rho,
    const LevelSetConfig& cfg = {});

/// Mean of log|{x : h_x >= s log N}| / log N against d(s) = 2 - s^2/(2g).
TestReport daviaud_exponent(const std::vector<FieldSample>& samples, double s,
                            double tolerance = 0.25);

}  // namespace gff
