#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gff/field.hpp"
#include "gff/lattice.hpp"

namespace gff {

/// Finite point measure: scaled positions in [0,1]^2 and centered heights
/// h - m_N, restricted to h >= -lambda. Extraction metadata kept alongside.
struct PointMeasure {
  struct Point {
    double x1 = 0.0;
    double x2 = 0.0;
    double h = 0.0;
  };
  std::vector<Point> points;
  int n = 0;
  int r = 0;
  double lambda = 0.0;
  std::uint64_t seed = 0;
};

/// Every site whose height dominates the l^1 ball Lambda_r around it
/// (heights outside V_N count as 0). Ties resolve to the lexicographically
/// smaller site. Sliding-window implementation; matches local_maxima_brute
/// exactly by contract.
std::vector<Site> local_maxima(const FieldSample& h, int r);

/// Exhaustive-scan reference with the identical tie-break.
std::vector<Site> local_maxima_brute(const FieldSample& h, int r);

/// Level set Gamma_N(lambda) = {x : h_x >= m_N - lambda}.
std::vector<Site> level_set(const FieldSample& h, double lambda);

/// eta_{N,r} with cutoff: points (x/N, h_x - m_N) over r-local maxima with
/// h_x >= m_N - lambda. Uses a threshold pre-filter, so the cost is dominated
/// by the (typically few) candidate sites.
PointMeasure extract_eta(const FieldSample& h, int r, double lambda);

/// S_{l,N}: largest sum of heights over an l-point subset = descending prefix
/// sum; also returns the achieving set.
std::pair<double, std::vector<Site>> top_l_sum(const FieldSample& h, long l);

/// max - min of the field over a nonempty region.
double oscillation(const FieldSample& h, const std::vector<Site>& region);

}  // namespace gff
