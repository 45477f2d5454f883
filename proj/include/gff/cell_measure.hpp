#pragma once

#include <stdexcept>
#include <vector>

#include "gff/rng.hpp"

namespace gff {

/// Nonnegative mass per cell of a regular m x m grid over [0,1]^2 (row-major
/// in the first coordinate). Discretizes Z(dx) and Z_K(dx).
struct CellMeasure {
  int m = 1;
  std::vector<double> cells;  // size m*m
  double total = 0.0;

  static CellMeasure uniform(int m, double total_mass) {
    CellMeasure z;
    z.m = m;
    z.cells.assign(static_cast<std::size_t>(m) * m,
                   total_mass / (static_cast<double>(m) * m));
    z.total = total_mass;
    return z;
  }

  static CellMeasure zero(int m) {
    CellMeasure z;
    z.m = m;
    z.cells.assign(static_cast<std::size_t>(m) * m, 0.0);
    return z;
  }

  void add(double x1, double x2, double mass) {
    int i = std::min(static_cast<int>(x1 * m), m - 1);
    int j = std::min(static_cast<int>(x2 * m), m - 1);
    if (i < 0 || j < 0) throw std::domain_error("CellMeasure: point outside [0,1]^2");
    cells[static_cast<std::size_t>(i) * m + j] += mass;
    total += mass;
  }

  /// Mass of the axis-aligned rectangle [a1,b1] x [a2,b2], counting cells by
  /// their centers.
  double box_mass(double a1, double b1, double a2, double b2) const {
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
      const double c1 = (i + 0.5) / m;
      if (c1 < a1 || c1 > b1) continue;
      for (int j = 0; j < m; ++j) {
        const double c2 = (j + 0.5) / m;
        if (c2 >= a2 && c2 <= b2) s += cells[static_cast<std::size_t>(i) * m + j];
      }
    }
    return s;
  }

  /// Position sampled from the normalized measure (uniform inside a cell).
  void sample_position(Rng& rng, double* x1, double* x2) const {
    if (!(total > 0.0)) throw std::domain_error("CellMeasure: zero total mass");
    double u = rng.next_uniform() * total;
    std::size_t idx = 0;
    for (; idx + 1 < cells.size(); ++idx) {
      if (u <= cells[idx]) break;
      u -= cells[idx];
    }
    const int i = static_cast<int>(idx) / m;
    const int j = static_cast<int>(idx) % m;
    *x1 = (i + rng.next_uniform_co()) / m;
    *x2 = (j + rng.next_uniform_co()) / m;
  }
};

}  // namespace gff
