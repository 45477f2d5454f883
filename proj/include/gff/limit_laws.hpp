#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gff/cell_measure.hpp"
#include "gff/extremal.hpp"
#include "gff/report.hpp"
#include "gff/rng.hpp"
#include "gff/stats.hpp"
#include "gff/test_function.hpp"

namespace gff {

/// Per-replicate centered maximum and scaled argmax position.
struct MaxSample {
  struct Entry {
    double max_centered = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
  };
  std::vector<Entry> entries;
  int n = 0;
};

/// Draw from PPP(Z(dx) x e^{-alpha h} dh) above the floor h_min.
struct GumbelProcessSample {
  std::vector<PointMeasure::Point> points;
  double z_total = 0.0;
  double h_min = 0.0;
};

/// Monte Carlo mean and stderr of exp(-<eta, f>).
Summary laplace_functional(const std::vector<PointMeasure>& measures,
                           const TestFunction& f);

/// Heights move by independent N(-alpha t/2, t) draws; positions stay.
PointMeasure dyson_shift(const PointMeasure& measure, double t,
                         std::uint64_t seed);

struct InvarianceOptions {
  double slack = 0.0;        // finite-size allowance added to 3 combined stderr
  int quad_order = 64;
  int table_size = 4096;
  std::uint64_t dyson_seed = 7;
};

/// Dysonization invariance: E e^{-<eta,f>} vs E e^{-<eta,f_t>} on the same
/// measures, plus the direct route through dyson_shift. The verdict compares
/// |difference| against 3*sqrt(se_f^2 + se_ft^2) + slack.
TestReport invariance_test(const std::vector<PointMeasure>& measures,
                           const TestFunction& f, double t,
                           const InvarianceOptions& opts = {});

GumbelProcessSample sample_gumbel_ppp(const CellMeasure& z, double h_min,
                                      std::uint64_t seed);

PointMeasure to_point_measure(const GumbelProcessSample& g);

struct SpacingEstimate {
  std::vector<double> sequence;  // alpha * n * e^{alpha h_n}
  double estimate = 0.0;
};

/// alpha n e^{alpha h_n} -> Z(A): the sequence over descending heights and
/// its tail average (deepest half). min_points defaults to the contract's
/// 100; pipelines that feed desk-scale replicates override it explicitly.
SpacingEstimate z_from_spacings(std::vector<double> heights,
                                std::size_t min_points = 100);

struct TailFitConfig {
  double window_lo = 1.5;
  double window_hi = 4.0;
  double grid_step = 0.25;
  long min_tail_count = 10;  // drop grid points with fewer exceedances
  int bootstrap = 1000;
  std::uint64_t seed = 99;
};

/// Fit log[P(M >= t)/t] = log C* - alpha t over the configured window.
/// Reports alpha_hat (estimate) and C*_hat with bootstrap errors.
TestReport max_tail_fit(const MaxSample& maxes, const TailFitConfig& cfg = {});

/// Maxima from the exact limit law P(M <= t | Z) = exp(-Z e^{-alpha t}/alpha):
/// one draw per entry of z_values (cycled if count > size).
std::vector<double> sample_limit_law_max(std::span<const double> z_values,
                                         std::size_t count, std::uint64_t seed);

/// Small-lambda Laplace diagnostics: (1 - E e^{-lZ})/(l log(1/l)) and
/// E(Z e^{-lZ})/log(1/l) share the limit C*. Reports the plateau (smallest
/// lambda) values and their agreement.
TestReport laplace_small_lambda(std::span<const double> z_samples,
                                std::span<const double> lambda_grid,
                                double agreement_tolerance = 0.15);

struct Region {
  double x1_lo = 0.0, x1_hi = 1.0, x2_lo = 0.0, x2_hi = 1.0;
  bool contains(double x1, double x2) const {
    return x1 >= x1_lo && x1 < x1_hi && x2 >= x2_lo && x2 < x2_hi;
  }
};

struct ArgmaxLawOptions {
  std::vector<double> t_grid{-1.0, 0.0, 1.0, 2.0};
  double high_threshold = 2.0;  // conditioning level for the psi comparison
  int psi_grid = 16;
  std::function<double(double, double)> psi;  // optional density oracle
};

/// Joint law of (argmax position, centered max): empirical nu_N over regions
/// and t grid; quadrant symmetry at 3 stderr; optional L1 comparison of the
/// conditional argmax histogram against psi vs uniform.
TestReport argmax_joint_law(const MaxSample& maxes,
                            const std::vector<Region>& regions,
                            const ArgmaxLawOptions& opts = {});

struct MomentDiagnosticsConfig {
  std::vector<double> p_grid{-0.5, 0.0, 0.5, 0.9, 1.0};
  double hill_fraction = 0.1;  // top fraction used by the Hill estimator
  double hill_lo = 0.7, hill_hi = 1.3;
  bool hard = false;
};

/// Tail-index and moment diagnostics for Z samples (Hill ~ 1 expected).
TestReport z_moment_diagnostics(std::span<const double> z_samples,
                                const MomentDiagnosticsConfig& cfg = {});

}  // namespace gff
