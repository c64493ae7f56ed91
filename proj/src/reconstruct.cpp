#include "gtfa/reconstruct.hpp"

#include <cmath>

#include "gtfa/errors.hpp"

namespace gtfa {

namespace {

int require_cyclic(const Group& g) {
  const auto n = g.cyclic_order();
  if (!n) throw Error("phase retrieval requires a standard cyclic group");
  return *n;
}

}  // namespace

RealVector magnitudes_from_margins(const TFFunction& q) {
  const int n = require_cyclic(q.group());
  RealVector m(n);
  for (int x = 0; x < n; ++x) {
    double s = 0.0;
    for (int eta = 0; eta < n; ++eta) s += q.block(x, eta)(0, 0).real();
    if (s < -1e-9) throw MarginNegative(x, s);
    m[x] = std::max(s, 0.0);
  }
  return m;
}

Matrix partial_autocorrelations(const TFFunction& q) {
  const int n = require_cyclic(q.group());
  const AmbiguityFunction fq = symplectic_fourier(q);
  Matrix e = Matrix::Zero(n, n);
  Vector h(n);
  for (int y = 1; y < n; ++y) {
    const Complex scale = static_cast<double>(n) * (1.0 - unit_root(-y, n)) / (kI * (2.0 * kPi));
    h[0] = static_cast<double>(y) * fq.block(y, 0)(0, 0);
    for (int xi = 1; xi < n; ++xi) h[xi] = fq.block(y, xi)(0, 0) * scale;
    for (int x = 0; x < n; ++x) {
      Complex s{};
      for (int xi = 0; xi < n; ++xi) s += unit_root(static_cast<long long>(x) * xi, n) * h[xi];
      e(x, y) = s;
    }
  }
  return e;
}

PhaseRetrieval phase_retrieve(const TFFunction& q, double tol_zero) {
  const int n = require_cyclic(q.group());
  const RealVector m = magnitudes_from_margins(q);
  PhaseRetrieval out{Signal::zeros(q.group_ptr())};
  auto& u = out.signal;

  int z = 0;
  for (int x = 1; x < n; ++x)
    if (m[x] > m[z]) z = x;
  if (m[z] < tol_zero) {
    out.all_zero = true;
    return out;
  }
  out.pivot = z;
  out.pivot_magnitude = std::sqrt(m[z]);
  u(z) = out.pivot_magnitude;

  const Matrix e = partial_autocorrelations(q);
  auto at = [n](int i) { return ((i % n) + n) % n; };
  // magnitude from the margin, phase from the residual
  auto settle = [&](int pos, Complex residual) {
    if (m[pos] < tol_zero) return Complex{};
    const double r = std::abs(residual);
    return r > 0.0 ? std::sqrt(m[pos]) * residual / r : Complex(std::sqrt(m[pos]), 0.0);
  };

  for (int j = 1; 2 * j <= n; ++j) {
    // E(z+1, j) = u(z+j) conj(u(z)) + sum_{k=0}^{j-2} u(z+1+k) conj(u(z+1+k-j))
    Complex s = e(at(z + 1), j);
    for (int k = 0; k + 1 < j; ++k) s -= u(at(z + 1 + k)) * std::conj(u(at(z + 1 + k - j)));
    const int fwd = at(z + j);
    u(fwd) = settle(fwd, s / out.pivot_magnitude);
    if (2 * j == n) break;

    // E(z, j) = u(z) conj(u(z-j)) + sum_{k=1}^{j-1} u(z+k) conj(u(z+k-j))
    Complex t = e(z, j);
    for (int k = 1; k < j; ++k) t -= u(at(z + k)) * std::conj(u(at(z + k - j)));
    const int bwd = at(z - j);
    u(bwd) = settle(bwd, std::conj(t / out.pivot_magnitude));
  }

  int runs = 0;
  for (int x = 0; x < n; ++x)
    if (m[x] >= tol_zero && m[at(x - 1)] < tol_zero) ++runs;
  out.islands = runs == 0 ? 1 : runs;
  return out;
}

double class_distance(const Signal& u, const Signal& w) {
  const Complex c = haar_inner(u, w);
  const Complex lambda = std::abs(c) > 0.0 ? c / std::abs(c) : Complex(1.0, 0.0);
  Signal diff = u;
  diff.values() -= lambda * w.values();
  return norm(diff);
}

RoundTripReport roundtrip_report(const Signal& u) {
  const auto k = born_jordan_cyclic_kernel(u.group_ptr());
  const TFFunction q = cohen_distribution(k, u);
  const PhaseRetrieval pr = phase_retrieve(q);
  TFFunction diff = cohen_distribution(k, pr.signal);
  diff.data() -= q.data();
  return {class_distance(u, pr.signal), tf_norm(diff), pr.pivot, pr.pivot_magnitude, pr.islands, pr.all_zero};
}

}  // namespace gtfa
