#include "gff/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gff {

Summary summarize(std::span<const double> xs) {
  Summary s;
  s.n = static_cast<long>(xs.size());
  if (s.n == 0) return s;
  double m = 0.0;
  for (double x : xs) m += x;
  m /= static_cast<double>(s.n);
  double v = 0.0;
  for (double x : xs) v += (x - m) * (x - m);
  s.mean = m;
  if (s.n > 1) s.stderr_ = std::sqrt(v / (static_cast<double>(s.n) * (s.n - 1.0)));
  return s;
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
double norm_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }
double norm_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

// Series / continued-fraction evaluation of P(a,x), cf. Numerical Recipes 6.2.
double gamma_p(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::domain_error("gamma_p: bad arguments");
  if (x == 0.0) return 0.0;
  const double gln = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gln);
  }
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return 1.0 - std::exp(-x + a * std::log(x) - gln) * h;
}

double chi2_sf(double x, double df) {
  if (x <= 0.0) return 1.0;
  return 1.0 - gamma_p(0.5 * df, 0.5 * x);
}

namespace {
double kolmogorov_sf(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}
}  // namespace

double ks_two_sample_p(std::vector<double> a, std::vector<double> b, double* d_out) {
  if (a.empty() || b.empty()) throw std::domain_error("ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(i / na - j / nb));
  }
  if (d_out) *d_out = d;
  const double ne = std::sqrt(na * nb / (na + nb));
  return kolmogorov_sf((ne + 0.12 + 0.11 / ne) * d);
}

double poisson_gof_p(std::span<const std::uint64_t> counts, double mean) {
  if (counts.empty()) throw std::domain_error("poisson_gof: empty sample");
  std::uint64_t maxc = 0;
  for (auto c : counts) maxc = std::max(maxc, c);
  const double n = static_cast<double>(counts.size());
  std::vector<double> expected(maxc + 2, 0.0);
  double p = std::exp(-mean), cum = p;
  expected[0] = n * p;
  for (std::uint64_t k = 1; k <= maxc; ++k) {
    p *= mean / static_cast<double>(k);
    cum += p;
    expected[k] = n * p;
  }
  expected[maxc + 1] = n * std::max(0.0, 1.0 - cum);  // right tail bin
  std::vector<double> observed(maxc + 2, 0.0);
  for (auto c : counts) observed[c] += 1.0;

  // pool adjacent bins until every pooled bin expects >= 5
  std::vector<double> oe, ee;
  double o = 0.0, e = 0.0;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    o += observed[k];
    e += expected[k];
    if (e >= 5.0) {
      oe.push_back(o);
      ee.push_back(e);
      o = e = 0.0;
    }
  }
  if (e > 0.0 && !ee.empty()) {
    oe.back() += o;
    ee.back() += e;
  }
  if (ee.size() < 2) return 1.0;
  double chi2 = 0.0;
  for (std::size_t k = 0; k < ee.size(); ++k)
    chi2 += (oe[k] - ee[k]) * (oe[k] - ee[k]) / ee[k];
  return chi2_sf(chi2, static_cast<double>(ee.size() - 1));
}

double hill_estimate(std::vector<double> xs, std::size_t k) {
  if (xs.size() < k + 1 || k == 0) throw std::domain_error("hill: too few samples");
  std::nth_element(xs.begin(), xs.begin() + static_cast<long>(k), xs.end(),
                   std::greater<>());
  const double pivot = xs[k];
  if (pivot <= 0.0) throw std::domain_error("hill: nonpositive order statistic");
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i) s += std::log(xs[i] / pivot);
  return s / static_cast<double>(k);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::domain_error("fit_line: bad data");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LineFit f;
  const double denom = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

double fit_through_origin(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) throw std::domain_error("fit: bad data");
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
  }
  return sxy / sxx;
}

double bootstrap_stderr(std::span<const double> xs,
                        const std::function<double(std::span<const double>)>& stat,
                        int resamples, Rng rng) {
  if (xs.empty() || resamples < 2) throw std::domain_error("bootstrap: bad arguments");
  std::vector<double> buf(xs.size());
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(resamples));
  for (int r = 0; r < resamples; ++r) {
    Rng sub = rng.split(static_cast<std::uint64_t>(r) + 1);
    for (std::size_t i = 0; i < xs.size(); ++i)
      buf[i] = xs[sub.next_u64() % xs.size()];
    vals.push_back(stat(buf));
  }
  double m = 0.0;
  for (double v : vals) m += v;
  m /= vals.size();
  double var = 0.0;
  for (double v : vals) var += (v - m) * (v - m);
  return std::sqrt(var / (vals.size() - 1.0));
}

}  // namespace gff
