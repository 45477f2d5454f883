#include "gff/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "gff/constants.hpp"
#include "gff/stats.hpp"

namespace gff {

std::pair<LevelSetReport, TestReport> level_set_diagnostics(
    const std::vector<FieldSample>& samples, double lambda, double rho,
    const LevelSetConfig& cfg) {
  if (samples.size() < 100)
    throw std::domain_error("level_set_diagnostics: need >= 100 samples");
  LevelSetReport rep;
  rep.lambda = lambda;
  const int n = samples.front().box.n;
  const double lo = std::exp(cfg.c_low * lambda);
  const double hi = std::exp(cfg.c_high * lambda);
  const double band_lo = cfg.band_r;
  const double band_hi = static_cast<double>(n) / cfg.band_r;
  const int nbands = static_cast<int>(std::ceil(std::log2(n * std::sqrt(2.0)))) + 1;
  rep.separation_histogram.assign(nbands, 0);

  double size_sum = 0.0;
  long contained = 0, with_pair = 0, excluded = 0;
  for (const FieldSample& f : samples) {
    const auto gamma = level_set(f, lambda);
    size_sum += static_cast<double>(gamma.size());
    const double sz = static_cast<double>(gamma.size());
    if (sz >= lo && sz <= hi) ++contained;
    bool pair_found = false;
    for (std::size_t a = 0; a < gamma.size(); ++a)
      for (std::size_t b = a + 1; b < gamma.size(); ++b) {
        const double d = std::hypot(double(gamma[a].x1 - gamma[b].x1),
                                    double(gamma[a].x2 - gamma[b].x2));
        const int band = std::max(0, static_cast<int>(std::floor(std::log2(d))));
        if (band < nbands) ++rep.separation_histogram[band];
        if (d >= band_lo && d <= band_hi) pair_found = true;
      }
    if (pair_found) ++with_pair;
    for (const Site& s : gamma)
      if (!f.box.in_bulk(s, rho)) {
        ++excluded;
        break;
      }
  }
  const double m = static_cast<double>(samples.size());
  rep.mean_size = size_sum / m;
  rep.containment_frequency = contained / m;
  rep.intermediate_pair_frequency = with_pair / m;
  rep.bulk_exclusion_frequency = excluded / m;

  TestReport test;
  test.name = "level_set_diagnostics";
  test.estimate = rep.containment_frequency;
  test.stderr_ = std::sqrt(rep.containment_frequency *
                           (1.0 - rep.containment_frequency) / m);
  test.tolerance = cfg.min_containment;
  test.replicates = static_cast<long>(samples.size());
  test.extra["bulk_exclusion_frequency"] = rep.bulk_exclusion_frequency;
  test.extra["intermediate_pair_frequency"] = rep.intermediate_pair_frequency;
  test.extra["mean_size"] = rep.mean_size;
  const bool ok = rep.containment_frequency >= cfg.min_containment &&
                  rep.bulk_exclusion_frequency <= cfg.max_bulk_exclusion;
  test.verdict = TestReport::judge(ok, false);
  return {rep, test};
}

TestReport daviaud_exponent(const std::vector<FieldSample>& samples, double s,
                            double tolerance) {
  if (samples.empty()) throw std::domain_error("daviaud: no samples");
  if (!(s > 0.0 && s < 2.0 * std::sqrt(kG)))
    throw std::domain_error("daviaud: s must lie in (0, 2 sqrt(g))");
  std::vector<double> est;
  est.reserve(samples.size());
  for (const FieldSample& f : samples) {
    const double logn = std::log(static_cast<double>(f.box.n));
    const double cut = s * logn;
    long count = 0;
    for (long i = 0; i < f.values.size(); ++i)
      if (f.values[i] >= cut) ++count;
    est.push_back(std::log(static_cast<double>(std::max(count, 1L))) / logn);
  }
  const Summary sum = summarize(est);
  const double target = 2.0 - s * s / (2.0 * kG);
  TestReport rep;
  rep.name = "daviaud_exponent";
  rep.estimate = sum.mean;
  rep.stderr_ = sum.stderr_;
  rep.tolerance = tolerance;
  rep.replicates = sum.n;
  rep.extra["d_s"] = target;
  rep.extra["s"] = s;
  rep.verdict = TestReport::judge(std::fabs(sum.mean - target) <= tolerance, false);
  return rep;
}

}  // namespace gff
