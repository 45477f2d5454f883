#include "gff/gibbs_markov.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gff/dst.hpp"

namespace gff {

namespace {

// 5-point stencil product y = (4I - A) x on an (m-1)^2 Dirichlet grid.
void apply_quarter_laplacian(const std::vector<double>& x, std::vector<double>& y,
                             int m) {
  const int s = m - 1;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      double v = 4.0 * x[static_cast<std::size_t>(i) * s + j];
      if (i > 0) v -= x[static_cast<std::size_t>(i - 1) * s + j];
      if (i < s - 1) v -= x[static_cast<std::size_t>(i + 1) * s + j];
      if (j > 0) v -= x[static_cast<std::size_t>(i) * s + j - 1];
      if (j < s - 1) v -= x[static_cast<std::size_t>(i) * s + j + 1];
      y[static_cast<std::size_t>(i) * s + j] = v;
    }
}

// Conjugate gradient for (4I - A) u = rhs, max-norm residual below tol.
void cg_dirichlet(const std::vector<double>& rhs, std::vector<double>& u, int m,
                  double tol) {
  const std::size_t n = rhs.size();
  u.assign(n, 0.0);
  std::vector<double> r = rhs, p = rhs, ap(n);
  double rr = 0.0;
  for (double v : r) rr += v * v;
  if (rr == 0.0) return;
  const int max_iter = 20 * m + 200;
  for (int it = 0; it < max_iter; ++it) {
    apply_quarter_laplacian(p, ap, m);
    double pap = 0.0;
    for (std::size_t i = 0; i < n; ++i) pap += p[i] * ap[i];
    const double alpha = rr / pap;
    double rmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
      rmax = std::max(rmax, std::fabs(r[i]));
    }
    if (rmax < tol) return;
    double rr_new = 0.0;
    for (double v : r) rr_new += v * v;
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
}

// Boundary sites of sub-box i and the rhs they induce on interior unknowns.
std::vector<double> subbox_rhs(const FieldSample& h, const SubBoxGrid& grid,
                               int i) {
  const int m = grid.sub_n();
  const Site off = grid.offset(i);
  const int s = m - 1;
  std::vector<double> rhs(static_cast<std::size_t>(s) * s, 0.0);
  for (int a = 1; a <= s; ++a) {
    rhs[static_cast<std::size_t>(0) * s + (a - 1)] +=
        h.at({off.x1, off.x2 + a});
    rhs[static_cast<std::size_t>(s - 1) * s + (a - 1)] +=
        h.at({off.x1 + m, off.x2 + a});
    rhs[static_cast<std::size_t>(a - 1) * s + 0] += h.at({off.x1 + a, off.x2});
    rhs[static_cast<std::size_t>(a - 1) * s + (s - 1)] +=
        h.at({off.x1 + a, off.x2 + m});
  }
  return rhs;
}

}  // namespace

CoarseFineSplit gibbs_markov_split(const FieldSample& h, int k) {
  SubBoxGrid grid(h.box, k);
  FieldSample coarse;
  coarse.box = h.box;
  coarse.seed = h.seed;
  coarse.generator = "coarse";
  coarse.values = h.values;  // grid-line sites keep their value exactly
  const int m = grid.sub_n();
  std::vector<double> u;
  for (int i = 0; i < grid.count(); ++i) {
    const auto rhs = subbox_rhs(h, grid, i);
    cg_dirichlet(rhs, u, m, 1e-11);
    const Site off = grid.offset(i);
    const int s = m - 1;
    for (int a = 1; a <= s; ++a)
      for (int b = 1; b <= s; ++b)
        coarse.values[h.box.index({off.x1 + a, off.x2 + b})] =
            u[static_cast<std::size_t>(a - 1) * s + (b - 1)];
  }
  FieldSample fine;
  fine.box = h.box;
  fine.seed = h.seed;
  fine.generator = "fine";
  fine.values = h.values - coarse.values;
  return CoarseFineSplit{std::move(coarse), std::move(fine), grid};
}

CoarsePointKernel::CoarsePointKernel(const LatticeBox& box, int k, Site site) {
  SubBoxGrid grid(box, k);
  const int i = grid.sub_box_of(site);
  if (i < 0)
    throw std::domain_error("CoarsePointKernel: site lies on a tiling line");
  const int m = grid.sub_n();
  const Site off = grid.offset(i);
  const int s = m - 1;

  // w = (4I - A)^{-1} e_site on the sub-box, via sine diagonalization.
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<long>(s) * s);
  e[static_cast<long>(site.x1 - off.x1 - 1) * s + (site.x2 - off.x2 - 1)] = 1.0;
  Eigen::VectorXd tmp, w;
  dst2d(e, tmp, s);
  for (int j = 1; j <= s; ++j)
    for (int l = 1; l <= s; ++l)
      tmp[static_cast<long>(j - 1) * s + (l - 1)] /=
          4.0 - 2.0 * std::cos(M_PI * j / m) - 2.0 * std::cos(M_PI * l / m);
  dst2d(tmp, w, s);
  w /= 4.0 * m * m;

  // exit weight at boundary site b: sum of w over interior neighbors of b
  auto push = [&](Site b, double weight) {
    if (weight != 0.0) {
      boundary_.push_back(b);
      weights_.push_back(weight);
    }
  };
  for (int a = 1; a <= s; ++a) {
    push({off.x1, off.x2 + a}, w[static_cast<long>(0) * s + (a - 1)]);
    push({off.x1 + m, off.x2 + a}, w[static_cast<long>(s - 1) * s + (a - 1)]);
    push({off.x1 + a, off.x2}, w[static_cast<long>(a - 1) * s + 0]);
    push({off.x1 + a, off.x2 + m}, w[static_cast<long>(a - 1) * s + (s - 1)]);
  }
}

double CoarsePointKernel::eval(const FieldSample& h) const {
  double v = 0.0;
  for (std::size_t i = 0; i < boundary_.size(); ++i)
    v += weights_[i] * h.at(boundary_[i]);
  return v;
}

}  // namespace gff
