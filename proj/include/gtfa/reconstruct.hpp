#pragma once

#include "gtfa/transforms.hpp"

namespace gtfa {

/// |u(x)|^2 read off the time margins sum_eta Q(x, eta). Entries in
/// [-1e-9, 0) are clamped to zero; anything lower throws MarginNegative.
RealVector magnitudes_from_margins(const TFFunction& q);

/// E(x, y) = sum_{k=0}^{y-1} u(x+k) conj(u(x+k-y)) for y = 1..N-1, extracted from
/// a Born-Jordan distribution on Z/NZ. Column y holds lag y; column 0 is zero.
Matrix partial_autocorrelations(const TFFunction& q);

struct PhaseRetrieval {
  Signal signal;
  int pivot = 0;
  double pivot_magnitude = 0.0;
  /// Maximal runs of nonzero samples around the index circle.
  int islands = 0;
  bool all_zero = false;
};

/// Recovers a representative of [u] from Q[u], real and positive at the pivot
/// argmax |u| (smallest index on ties). Samples whose squared magnitude is below
/// tol_zero are set to zero.
PhaseRetrieval phase_retrieve(const TFFunction& q, double tol_zero = 1e-9);

struct RoundTripReport {
  double class_distance = 0.0;
  double distribution_residual = 0.0;
  int pivot = 0;
  double pivot_magnitude = 0.0;
  int islands = 0;
  bool all_zero = false;
};

/// min over |lambda| = 1 of ||u - lambda w||.
double class_distance(const Signal& u, const Signal& w);
RoundTripReport roundtrip_report(const Signal& u);

}  // namespace gtfa
