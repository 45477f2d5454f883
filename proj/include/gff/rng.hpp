#pragma once

#include <cmath>
#include <cstdint>

namespace gff {

/// Counter-based splittable generator. Every draw is a strong 64-bit mix of
/// (key, counter), so independent streams are obtained by deriving child keys
/// rather than by jumping a shared state. Replicates, bootstrap resamples and
/// per-site streams all get their own key and stay reproducible regardless of
/// scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key), ctr_(0) {}

  /// Child generator with an independent stream; (key, stream) -> new key.
  Rng split(std::uint64_t stream) const {
    return Rng(mix(key_ ^ mix(stream + 0x9e3779b97f4a7c15ull)));
  }

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++ctr_); }

  /// Uniform on (0,1]; never returns 0 so log() is safe.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
  }

  /// Uniform on [0,1).
  double next_uniform_co() {
    return static_cast<double>(next_u64() >> 11) * 0x1p-53;
  }

  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_uniform_co() - 1.0;
      v = 2.0 * next_uniform_co() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

  double next_exponential(double rate) { return -std::log(next_uniform()) / rate; }

  /// Poisson draw; inversion for small mean, Hormann's PTRS rejection above.
  std::uint64_t next_poisson(double mean);

  std::uint64_t key() const { return key_; }

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline std::uint64_t Rng::next_poisson(double mean) {
  if (mean <= 0.0) return 0;
  if (mean < 30.0) {
    // multiplication method
    const double l = std::exp(-mean);
    std::uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= next_uniform();
    } while (p > l);
    return k - 1;
  }
  // PTRS (Hormann 1993), valid for mean >= 10
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  const double lmu = std::log(mean);
  for (;;) {
    double u = next_uniform_co() - 0.5;
    double v = next_uniform_co();
    double us = 0.5 - std::fabs(u);
    double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * lmu - mean - std::lgamma(kf + 1.0)) {
      return static_cast<std::uint64_t>(kf);
    }
  }
}

}  // namespace gff
