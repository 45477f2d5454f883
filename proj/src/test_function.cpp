#include "gff/test_function.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gff/constants.hpp"
#include "gff/stats.hpp"

namespace gff {

TestFunction TestFunction::indicator(double beta, double a, double b) {
  if (beta < 0.0) throw std::domain_error("TestFunction: beta must be >= 0");
  TestFunction f;
  f.kind = Kind::kIndicator;
  f.beta = beta;
  f.a = a;
  f.b = b;
  return f;
}

TestFunction TestFunction::smooth_bump(double beta, double a, double b) {
  if (beta < 0.0 || !(b > a))
    throw std::domain_error("TestFunction: invalid bump parameters");
  TestFunction f;
  f.kind = Kind::kSmoothBump;
  f.beta = beta;
  f.a = a;
  f.b = b;
  return f;
}

double TestFunction::profile(double h) const {
  switch (kind) {
    case Kind::kIndicator:
      return (h >= a && h <= b) ? beta : 0.0;
    case Kind::kSmoothBump: {
      const double u = (2.0 * h - a - b) / (b - a);
      if (std::fabs(u) >= 1.0) return 0.0;
      return beta * std::exp(1.0 - 1.0 / (1.0 - u * u));
    }
    case Kind::kTabulated: {
      if (table.empty()) return 0.0;
      const double pos = (h - h0) / dh;
      if (pos <= 0.0) return table.front();
      if (pos >= static_cast<double>(table.size() - 1)) return table.back();
      const std::size_t i = static_cast<std::size_t>(pos);
      const double w = pos - static_cast<double>(i);
      return (1.0 - w) * table[i] + w * table[i + 1];
    }
  }
  return 0.0;
}

double TestFunction::sup() const {
  if (kind == Kind::kTabulated)
    return table.empty() ? 0.0 : *std::max_element(table.begin(), table.end());
  return beta;
}

namespace {
std::mutex gh_mutex;
std::map<int, std::pair<std::vector<double>, std::vector<double>>> gh_cache;
}  // namespace

void gauss_hermite(int order, std::vector<double>* nodes,
                   std::vector<double>* weights) {
  if (order < 1) throw std::domain_error("gauss_hermite: order must be >= 1");
  std::lock_guard<std::mutex> lock(gh_mutex);
  auto it = gh_cache.find(order);
  if (it == gh_cache.end()) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int i = 1; i < order; ++i) {
      const double off = std::sqrt(i / 2.0);
      jacobi(i, i - 1) = jacobi(i - 1, i) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    std::vector<double> n(order), w(order);
    for (int i = 0; i < order; ++i) {
      n[i] = es.eigenvalues()[i];
      const double v0 = es.eigenvectors()(0, i);
      w[i] = std::sqrt(M_PI) * v0 * v0;
    }
    it = gh_cache.emplace(order, std::make_pair(std::move(n), std::move(w))).first;
  }
  *nodes = it->second.first;
  *weights = it->second.second;
}

TestFunction f_t_transform(const TestFunction& f, double t, int quad_order,
                           int table_size) {
  if (!(t > 0.0)) throw std::domain_error("f_t_transform: t must be positive");
  if (table_size < 8) throw std::domain_error("f_t_transform: table too small");
  const double drift = 0.5 * kAlpha * t;
  const double spread = 8.0 * std::sqrt(t) + 1.0;
  const double sup_f = f.sup();

  // height range where f_t is not numerically negligible
  const double prof_hi =
      std::isinf(f.b) ? f.a : (f.kind == TestFunction::Kind::kTabulated
                                   ? f.h0 + f.dh * static_cast<double>(f.table.size())
                                   : f.b);
  const double lo = f.support_floor() + drift - spread;
  const double hi = prof_hi + drift + spread;

  TestFunction out;
  out.kind = TestFunction::Kind::kTabulated;
  out.beta = sup_f;
  out.a = lo;
  out.b = hi;
  out.x1_lo = f.x1_lo;
  out.x1_hi = f.x1_hi;
  out.x2_lo = f.x2_lo;
  out.x2_hi = f.x2_hi;
  out.h0 = lo;
  out.dh = (hi - lo) / static_cast<double>(table_size - 1);
  out.table.resize(static_cast<std::size_t>(table_size));

  const double sqt = std::sqrt(t);
  if (f.kind == TestFunction::Kind::kIndicator) {
    // exact Gaussian masses: no quadrature error at the jump
    const double decay = 1.0 - std::exp(-f.beta);
    for (int i = 0; i < table_size; ++i) {
      const double h = lo + out.dh * i;
      double p = norm_sf((f.a - h + drift) / sqt);
      if (!std::isinf(f.b)) p -= norm_sf((f.b - h + drift) / sqt);
      const double e = 1.0 - decay * p;
      out.table[static_cast<std::size_t>(i)] =
          std::clamp(-std::log(e), 0.0, sup_f);
    }
  } else {
    std::vector<double> nodes, weights;
    gauss_hermite(quad_order, &nodes, &weights);
    const double scale = std::sqrt(2.0 * t);
    const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
    for (int i = 0; i < table_size; ++i) {
      const double h = lo + out.dh * i;
      double e = 0.0;
      for (int q = 0; q < quad_order; ++q)
        e += weights[q] * std::exp(-f.profile(h + scale * nodes[q] - drift));
      out.table[static_cast<std::size_t>(i)] =
          std::clamp(-std::log(e * inv_sqrt_pi), 0.0, sup_f);
    }
  }
  // tabulated profiles clamp to their endpoint values; force an exact zero
  // at the low end so f_t vanishes below the tabulated range
  out.table.front() = 0.0;
  return out;
}

}  // namespace gff
