#include "gff/green.hpp"

#include <cmath>
#include <stdexcept>

#include "gff/constants.hpp"

namespace gff {

GreenOperator::GreenOperator(LatticeBox box) : box_(box) {
  const int m = box_.side();
  const double n = box_.n;
  mu_.resize(static_cast<long>(m) * m);
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= m; ++k)
      mu_[static_cast<long>(j - 1) * m + (k - 1)] =
          1.0 - 0.5 * (std::cos(M_PI * j / n) + std::cos(M_PI * k / n));
  sin_table_.resize(m, m);
  for (int j = 1; j <= m; ++j)
    for (int x = 1; x <= m; ++x)
      sin_table_(j - 1, x - 1) = std::sin(M_PI * j * x / n);
}

double GreenOperator::at(Site x, Site y) const {
  if (!box_.contains(x) || !box_.contains(y))
    throw std::domain_error("green: site outside the box");
  const int m = box_.side();
  // Separable double sum: sum_j s_j(x1) s_j(y1) * [sum_k s_k(x2) s_k(y2)/mu_jk]
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    const double sj = sin_table_(j, x.x1 - 1) * sin_table_(j, y.x1 - 1);
    double inner = 0.0;
    const double* mu_row = mu_.data() + static_cast<long>(j) * m;
    for (int k = 0; k < m; ++k)
      inner += sin_table_(k, x.x2 - 1) * sin_table_(k, y.x2 - 1) / mu_row[k];
    total += sj * inner;
  }
  const double norm = 2.0 / box_.n;
  return norm * norm * total;
}

Eigen::MatrixXd GreenOperator::dense() const {
  if (box_.n > 64) throw std::domain_error("green: dense covariance capped at N=64");
  const long s = box_.sites();
  Eigen::MatrixXd g(s, s);
  for (long a = 0; a < s; ++a)
    for (long b = a; b < s; ++b)
      g(a, b) = g(b, a) = at(box_.site(a), box_.site(b));
  return g;
}

Eigen::MatrixXd GreenOperator::quarter_laplacian(const LatticeBox& box) {
  const long s = box.sites();
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(s, s);
  const int dx[4] = {1, -1, 0, 0};
  const int dy[4] = {0, 0, 1, -1};
  for (long a = 0; a < s; ++a) {
    const Site p = box.site(a);
    for (int d = 0; d < 4; ++d) {
      const Site q2{p.x1 + dx[d], p.x2 + dy[d]};
      if (box.contains(q2)) q(a, box.index(q2)) = -0.25;
    }
  }
  return q;
}

Eigen::MatrixXd GreenOperator::direct_solve(const LatticeBox& box) {
  if (box.n > 64) throw std::domain_error("green: direct solve capped at N=64");
  const Eigen::MatrixXd q = quarter_laplacian(box);
  return q.partialPivLu().solve(
      Eigen::MatrixXd::Identity(box.sites(), box.sites()));
}

TestReport green_bound_check(const LatticeBox& box, double rho,
                             const GreenBoundConfig& cfg) {
  if (rho <= 0.0 || rho >= 0.5)
    throw std::domain_error("green_bound_check: rho must be in (0, 1/2)");
  GreenOperator green(box);
  const double logn = std::log(static_cast<double>(box.n));
  double c_upper = -1e300;
  double c_bulk = -1e300;
  const int m = box.side();
  const int st = std::max(1, cfg.pair_stride);
  for (int a1 = 1; a1 <= m; a1 += st)
    for (int a2 = 1; a2 <= m; a2 += st)
      for (int b1 = a1; b1 <= m; b1 += st)
        for (int b2 = (b1 == a1 ? a2 : 1); b2 <= m; b2 += st) {
          const Site x{a1, a2}, y{b1, b2};
          const double r = std::hypot(double(b1 - a1), double(b2 - a2));
          const double ref = kG * (logn - std::log(std::max(r, 1.0)));
          const double diff = green.at(x, y) - ref;
          c_upper = std::max(c_upper, diff);
          if (box.in_bulk(x, rho) && box.in_bulk(y, rho))
            c_bulk = std::max(c_bulk, std::fabs(diff));
        }
  TestReport rep;
  rep.name = "green_bound_check";
  rep.estimate = c_upper;
  rep.extra["c_upper"] = c_upper;
  rep.extra["c_bulk"] = c_bulk;
  rep.tolerance = cfg.upper_ceiling;
  const bool ok = c_upper <= cfg.upper_ceiling && c_bulk <= cfg.bulk_ceiling;
  rep.verdict = TestReport::judge(ok, true);
  return rep;
}

}  // namespace gff
