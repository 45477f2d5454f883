#include "gff/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gff {

namespace {

// x dominates its ball iff no z in Lambda_r(x) has h_z > h_x, nor an equal
// value at a lexicographically smaller site.
bool dominates(const FieldSample& h, Site x, int r, double hx) {
  for (int d1 = -r; d1 <= r; ++d1) {
    const int rem = r - std::abs(d1);
    for (int d2 = -rem; d2 <= rem; ++d2) {
      const Site z{x.x1 + d1, x.x2 + d2};
      const double hz = h.at(z);
      if (hz > hx) return false;
      if (hz == hx && (z.x1 < x.x1 || (z.x1 == x.x1 && z.x2 < x.x2)))
        return false;
    }
  }
  return true;
}

// In-place 1D sliding maximum (half-width r) along a strided sequence.
void slide_max(const double* src, double* dst, int len, long stride, int r,
               std::deque<int>& dq) {
  dq.clear();
  for (int b = 0; b < len + r; ++b) {
    if (b < len) {
      const double v = src[b * stride];
      while (!dq.empty() && src[dq.back() * stride] <= v) dq.pop_back();
      dq.push_back(b);
    }
    const int c = b - r;
    if (c < 0) continue;
    while (dq.front() < c - r) dq.pop_front();
    dst[c * stride] = src[dq.front() * stride];
  }
}

}  // namespace

std::vector<Site> local_maxima_brute(const FieldSample& h, int r) {
  if (r < 1) throw std::domain_error("local_maxima: r must be >= 1");
  std::vector<Site> out;
  const int m = h.box.side();
  for (int x1 = 1; x1 <= m; ++x1)
    for (int x2 = 1; x2 <= m; ++x2) {
      const Site x{x1, x2};
      if (dominates(h, x, r, h.values[h.box.index(x)])) out.push_back(x);
    }
  return out;
}

std::vector<Site> local_maxima(const FieldSample& h, int r) {
  if (r < 1) throw std::domain_error("local_maxima: r must be >= 1");
  const int m = h.box.side();

  // Rotate u = x1+x2, v = x1-x2: |z-x|_1 = max(|du|,|dv|), so the l^1 ball
  // becomes a square window. Lattice points occupy the even-parity rotated
  // sites; the rest stay at -inf. The box is padded by r with Dirichlet zeros.
  const int mp = m + 2 * r;          // padded coordinates 1-r .. m+r
  const int rs = 2 * mp - 1;         // rotated grid side
  const double ninf = -std::numeric_limits<double>::infinity();
  std::vector<double> grid(static_cast<std::size_t>(rs) * rs, ninf);
  auto ridx = [&](int x1, int x2) {
    const int iu = (x1 + x2) - 2 * (1 - r);
    const int iv = (x1 - x2) + (mp - 1);
    return static_cast<std::size_t>(iu) * rs + iv;
  };
  for (int x1 = 1 - r; x1 <= m + r; ++x1)
    for (int x2 = 1 - r; x2 <= m + r; ++x2) grid[ridx(x1, x2)] = h.at({x1, x2});

  std::vector<double> rowmax(grid.size(), ninf), winmax(grid.size(), ninf);
  std::deque<int> dq;
  for (int iu = 0; iu < rs; ++iu)
    slide_max(grid.data() + static_cast<std::size_t>(iu) * rs,
              rowmax.data() + static_cast<std::size_t>(iu) * rs, rs, 1, r, dq);
  for (int iv = 0; iv < rs; ++iv)
    slide_max(rowmax.data() + iv, winmax.data() + iv, rs, rs, r, dq);

  std::vector<Site> out;
  for (int x1 = 1; x1 <= m; ++x1)
    for (int x2 = 1; x2 <= m; ++x2) {
      const std::size_t at = ridx(x1, x2);
      const double hx = grid[at];
      if (hx < winmax[at]) continue;
      // ball maximum: settle exact ties with the shared predicate
      if (dominates(h, {x1, x2}, r, hx)) out.push_back({x1, x2});
    }
  return out;
}

std::vector<Site> level_set(const FieldSample& h, double lambda) {
  const double cut = centering_mn(std::max(h.box.n, 3)) - lambda;
  std::vector<Site> out;
  for (long i = 0; i < h.values.size(); ++i)
    if (h.values[i] >= cut) out.push_back(h.box.site(i));
  return out;
}

PointMeasure extract_eta(const FieldSample& h, int r, double lambda) {
  if (r < 1) throw std::domain_error("extract_eta: r must be >= 1");
  const double mn = centering_mn(std::max(h.box.n, 3));
  const double cut = mn - lambda;
  PointMeasure pm;
  pm.n = h.box.n;
  pm.r = r;
  pm.lambda = lambda;
  pm.seed = h.seed;
  for (long i = 0; i < h.values.size(); ++i) {
    const double hx = h.values[i];
    if (hx < cut) continue;
    const Site x = h.box.site(i);
    if (!dominates(h, x, r, hx)) continue;
    pm.points.push_back({static_cast<double>(x.x1) / h.box.n,
                         static_cast<double>(x.x2) / h.box.n, hx - mn});
  }
  return pm;
}

std::pair<double, std::vector<Site>> top_l_sum(const FieldSample& h, long l) {
  if (l < 1 || l > h.box.sites())
    throw std::domain_error("top_l_sum: l out of range");
  std::vector<long> idx(h.values.size());
  std::iota(idx.begin(), idx.end(), 0L);
  std::nth_element(idx.begin(), idx.begin() + (l - 1), idx.end(),
                   [&](long a, long b) { return h.values[a] > h.values[b]; });
  double sum = 0.0;
  std::vector<Site> set;
  set.reserve(static_cast<std::size_t>(l));
  for (long i = 0; i < l; ++i) {
    sum += h.values[idx[i]];
    set.push_back(h.box.site(idx[i]));
  }
  return {sum, std::move(set)};
}

double oscillation(const FieldSample& h, const std::vector<Site>& region) {
  if (region.empty()) throw std::domain_error("oscillation: empty region");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const Site& s : region) {
    const double v = h.at(s);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

}  // namespace gff
