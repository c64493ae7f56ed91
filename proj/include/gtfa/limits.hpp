#pragma once

#include "gtfa/transforms.hpp"

namespace gtfa {

/// Finitely supported signal on the integers: values[i] sits at offset + i.
struct ZSignal {
  long offset = 0;
  Vector values;

  long size() const { return static_cast<long>(values.size()); }
  long last() const { return offset + size() - 1; }
  Complex at(long x) const { return (x < offset || x > last()) ? Complex{} : values[x - offset]; }
};

/// Samples D(x, theta_j), theta_j = j / M, for x = x0 .. x0 + cols - 1.
/// Row j is frequency, column is time.
struct ZTFGrid {
  long x0 = 0;
  int m = 1;
  Matrix values;
  /// Largest |Im| over the grid.
  double max_imag = 0.0;
};

/// Doppler-lag kernel of the circle limit, xi in Z, y in R/Z; zero at xi = 0.
Complex phi_DT(long xi, double y);
/// Doppler-lag kernel of the integer limit, xi in R/Z, y in Z; zero at y = 0.
Complex phi_DZ(double xi, long y);
/// Time-lag kernel 1/|y| on -y < x <= 0 or 0 < x <= -y, zero otherwise.
double varphi_DZ(long x, long y);

/// D(x, theta) = sum_y e^{-i 2 pi y theta} sum_t varphi(x - t, y) u(t) conj(u(t - y)).
/// With axis_fix the lag-zero axis carries |u(x)|^2, giving correct margins.
/// Columns are computed in parallel on up to GTFA_THREADS workers (0 or unset: all cores).
ZTFGrid q_z_distribution(const ZSignal& u, int m, bool axis_fix = true);

/// Time-lag kernel N varphi_DZ (plus the lag-zero axis term when axis_fix) on Z/NZ,
/// with lags read as centred representatives. For signals supported on fewer
/// than N/2 points the resulting cyclic transform is exactly Q_Z / N.
CohenKernel integer_born_jordan_on_cyclic(const GroupPtr& g, bool axis_fix = true);

/// Embeds u into Z/NZ with its support starting at N/3.
Signal embed_centered(const ZSignal& u, int n);

struct CyclicComparison {
  /// max |N Q_{Z/N}(x, k) - Q_Z(x, k/N)| over the central third, divided by max |Q_Z|.
  double residual = 0.0;
  /// Same comparison with the integer kernel carried onto Z/NZ (two-route check).
  double two_route_residual = 0.0;
  double scale = 0.0;
};
/// Requires N >= 3 * support.
CyclicComparison cyclic_vs_z_comparison(const ZSignal& u, int n);

/// Worker count from GTFA_THREADS.
int worker_count();

}  // namespace gtfa
