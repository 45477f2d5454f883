#include "gff/field.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

#include "gff/constants.hpp"
#include "gff/dst.hpp"
#include "gff/green.hpp"

namespace gff {

double centering_mn_real(double x) {
  if (!(x > 1.0)) throw std::domain_error("centering_mn: argument must exceed 1");
  const double sg = std::sqrt(kG);
  const double lx = std::log(x);
  return 2.0 * sg * lx - 0.75 * sg * std::log(lx);
}

double centering_mn(int n) {
  if (n < 3) throw std::domain_error("centering_mn: N must be >= 3");
  return centering_mn_real(static_cast<double>(n));
}

SpectralSampler::SpectralSampler(LatticeBox box) : box_(box) {
  const int m = box_.side();
  const double n = box_.n;
  inv_sqrt_mu_.resize(static_cast<long>(m) * m);
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= m; ++k) {
      const double mu =
          1.0 - 0.5 * (std::cos(M_PI * j / n) + std::cos(M_PI * k / n));
      inv_sqrt_mu_[static_cast<long>(j - 1) * m + (k - 1)] = 1.0 / std::sqrt(mu);
    }
}

FieldSample SpectralSampler::sample(std::uint64_t seed) const {
  const int m = box_.side();
  Rng rng = Rng(seed).split(0x5f3759df);
  Eigen::VectorXd coeffs(static_cast<long>(m) * m);
  for (long i = 0; i < coeffs.size(); ++i)
    coeffs[i] = rng.next_normal() * inv_sqrt_mu_[i];
  FieldSample f;
  f.box = box_;
  f.seed = seed;
  f.generator = "spectral";
  dst2d(coeffs, f.values, m);
  f.values *= 1.0 / (2.0 * box_.n);
  return f;
}

FieldSample sample_field(const LatticeBox& box, std::uint64_t seed) {
  return SpectralSampler(box).sample(seed);
}

CholeskySampler::CholeskySampler(LatticeBox box) : box_(box) {
  if (box_.n > 16)
    throw std::domain_error("CholeskySampler: dense oracle capped at N <= 16");
  chol_ = GreenOperator(box_).dense().llt().matrixL();
}

FieldSample CholeskySampler::sample(std::uint64_t seed) const {
  Rng rng = Rng(seed).split(0x5f3759df);
  Eigen::VectorXd xi(box_.sites());
  for (long i = 0; i < xi.size(); ++i) xi[i] = rng.next_normal();
  FieldSample f;
  f.box = box_;
  f.seed = seed;
  f.generator = "cholesky";
  f.values = chol_ * xi;
  return f;
}

FieldSample interpolate(const FieldSample& ha, const FieldSample& hb, double t) {
  if (ha.box.n != hb.box.n)
    throw std::domain_error("interpolate: fields live on different boxes");
  const double glogn = kG * std::log(static_cast<double>(ha.box.n));
  if (t < 0.0 || t > glogn)
    throw std::domain_error("interpolate: t must lie in [0, g log N]");
  const double s = t / glogn;
  FieldSample f;
  f.box = ha.box;
  f.seed = ha.seed;
  f.generator = "interpolated";
  f.values = std::sqrt(1.0 - s) * ha.values + std::sqrt(s) * hb.values;
  return f;
}

}  // namespace gff
