#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gff {

struct Site {
  int x1 = 0;
  int x2 = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

/// Box V_N = (0,N)^2 ∩ Z^2: the (N-1)^2 interior sites {1..N-1}^2, indexed
/// row-major. Heights outside the box are identically 0 (Dirichlet).
struct LatticeBox {
  int n = 2;

  explicit LatticeBox(int n_) : n(n_) {
    if (n < 2) throw std::domain_error("LatticeBox: N must be >= 2");
  }

  int side() const { return n - 1; }
  long sites() const { return static_cast<long>(n - 1) * (n - 1); }

  bool contains(Site s) const {
    return s.x1 >= 1 && s.x1 <= n - 1 && s.x2 >= 1 && s.x2 <= n - 1;
  }

  long index(Site s) const {
    if (!contains(s)) throw std::domain_error("LatticeBox: site out of range");
    return static_cast<long>(s.x1 - 1) * (n - 1) + (s.x2 - 1);
  }

  Site site(long idx) const {
    return Site{static_cast<int>(idx / (n - 1)) + 1,
                static_cast<int>(idx % (n - 1)) + 1};
  }

  /// Bulk sub-box V_{N,rho}: sites at distance > rho*N from the complement.
  /// min over the complement of |x-y| is the distance to the nearest face.
  bool in_bulk(Site s, double rho) const {
    const double d = rho * n;
    return s.x1 > d && s.x1 < n - d && s.x2 > d && s.x2 < n - d;
  }
};

/// K x K tiling of V_N into translates of V_{N/K}; V_N^{K,delta,i} shrinks
/// each sub-box by margin delta*(N/K) per side. Sub-box i has lattice offset
/// off(i); its interior sites are off + {1..N/K-1}^2.
struct SubBoxGrid {
  LatticeBox box;
  int k = 1;
  double delta = 0.0;

  SubBoxGrid(LatticeBox b, int k_, double delta_ = 0.0)
      : box(b), k(k_), delta(delta_) {
    if (k < 1 || box.n % k != 0)
      throw std::domain_error("SubBoxGrid: N must be divisible by K");
    if (delta < 0.0 || delta >= 0.5)
      throw std::domain_error("SubBoxGrid: delta must be in [0, 0.5)");
  }

  int sub_n() const { return box.n / k; }
  int count() const { return k * k; }

  Site offset(int i) const {
    const int m = sub_n();
    return Site{(i / k) * m, (i % k) * m};
  }

  /// Index of the sub-box whose interior contains s, or -1 if s lies on the
  /// tiling grid lines (sub-box boundaries interior to V_N).
  int sub_box_of(Site s) const {
    const int m = sub_n();
    if (s.x1 % m == 0 || s.x2 % m == 0) return -1;
    return (s.x1 / m) * k + (s.x2 / m);
  }

  bool in_shrunk(Site s, int i) const {
    const int m = sub_n();
    const Site o = offset(i);
    const double d = delta * m;
    const double a1 = s.x1 - o.x1, a2 = s.x2 - o.x2;
    return a1 > d && a1 < m - d && a2 > d && a2 < m - d;
  }
};

}  // namespace gff
