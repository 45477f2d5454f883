#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gff/rng.hpp"

namespace gff {

struct Summary {
  double mean = 0.0;
  double stderr_ = 0.0;
  long n = 0;
};

Summary summarize(std::span<const double> xs);

/// Standard normal cdf / upper tail / density.
double norm_cdf(double x);
double norm_sf(double x);
double norm_pdf(double x);

/// Lower regularized incomplete gamma P(a,x).
double gamma_p(double a, double x);

/// Survival of the chi-square distribution with df degrees of freedom.
double chi2_sf(double x, double df);

/// Asymptotic two-sample Kolmogorov-Smirnov p-value.
double ks_two_sample_p(std::vector<double> a, std::vector<double> b,
                       double* d_out = nullptr);

/// Chi-square goodness of fit of integer counts against Poisson(mean),
/// pooling bins to expected counts >= 5. Returns the p-value.
double poisson_gof_p(std::span<const std::uint64_t> counts, double mean);

/// Hill estimator from the k largest samples: mean log excess over the
/// (k+1)-th order statistic. ~1 for a Pareto tail of index 1.
double hill_estimate(std::vector<double> xs, std::size_t k);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);
double fit_through_origin(std::span<const double> x, std::span<const double> y);

/// Nonparametric bootstrap stderr of an arbitrary statistic.
double bootstrap_stderr(std::span<const double> xs,
                        const std::function<double(std::span<const double>)>& stat,
                        int resamples, Rng rng);

}  // namespace gff
