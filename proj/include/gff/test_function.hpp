#pragma once

#include <limits>
#include <vector>

namespace gff {

/// Nonnegative test function on [0,1]^2 x R: an indicator box in space times
/// a height profile. Profiles: a step on [a,b] of amplitude beta, a smooth
/// C-infinity bump on [a,b], or a tabulated curve (what f_t_transform emits).
struct TestFunction {
  enum class Kind { kIndicator, kSmoothBump, kTabulated };

  Kind kind = Kind::kIndicator;
  double beta = 1.0;
  double a = 0.0;
  double b = std::numeric_limits<double>::infinity();
  // spatial support box
  double x1_lo = 0.0, x1_hi = 1.0, x2_lo = 0.0, x2_hi = 1.0;
  // tabulated profile on the uniform grid h0 + i*dh
  double h0 = 0.0, dh = 1.0;
  std::vector<double> table;

  static TestFunction indicator(double beta, double a,
                                double b = std::numeric_limits<double>::infinity());
  static TestFunction smooth_bump(double beta, double a, double b);

  TestFunction& with_support(double lo1, double hi1, double lo2, double hi2) {
    x1_lo = lo1;
    x1_hi = hi1;
    x2_lo = lo2;
    x2_hi = hi2;
    return *this;
  }

  bool in_support(double x1, double x2) const {
    return x1 >= x1_lo && x1 <= x1_hi && x2 >= x2_lo && x2 <= x2_hi;
  }

  /// Height profile alone (the x-indicator stripped).
  double profile(double h) const;

  double operator()(double x1, double x2, double h) const {
    return in_support(x1, x2) ? profile(h) : 0.0;
  }

  double sup() const;

  /// Largest height below which the profile vanishes identically.
  double support_floor() const { return kind == Kind::kTabulated ? h0 : a; }
};

/// Gauss-Hermite nodes/weights for integrals against e^{-u^2} (Golub-Welsch).
void gauss_hermite(int order, std::vector<double>* nodes,
                   std::vector<double>* weights);

/// Dysonization acting on test functions:
///   f_t(x,h) = -log E^0 exp(-f(x, h + W_t - (alpha/2) t)).
/// Step profiles integrate exactly through Gaussian masses; smooth and
/// tabulated profiles use Gauss-Hermite of the given order. Result is a
/// tabulated profile on the same spatial box with 0 <= f_t <= sup f.
TestFunction f_t_transform(const TestFunction& f, double t, int quad_order = 64,
                           int table_size = 4096);

}  // namespace gff
