#include "gtfa/transforms.hpp"

#include <cmath>

#include "gtfa/errors.hpp"

namespace gtfa {

namespace {

int require_cyclic(const Group& g, const char* what) {
  const auto n = g.cyclic_order();
  if (!n) throw Error(std::string(what) + " requires a standard cyclic group");
  return *n;
}

bool block_is_zero(const Eigen::Map<const Matrix>& b) { return b.cwiseAbs().maxCoeff() == 0.0; }

}  // namespace

TFFunction rihaczek(const Signal& u, const Signal& v) {
  require_same_group(u.group(), v.group());
  const Group& g = u.group();
  const auto vh = fourier(v);
  TFFunction r(u.group_ptr());
  for (int x = 0; x < g.order(); ++x)
    for (int e = 0; e < g.irrep_count(); ++e) r.block(x, e) = u(x) * g.irrep(e)(x).adjoint() * vh.block(e).adjoint();
  return r;
}

AmbiguityFunction ambiguity_transform(const Signal& u, const Signal& v) {
  require_same_group(u.group(), v.group());
  const Group& g = u.group();
  const int n = g.order();
  AmbiguityFunction a(u.group_ptr());
  Vector w(n);
  for (int y = 0; y < n; ++y) {
    const int yi = g.inv(y);
    for (int x = 0; x < n; ++x) w[x] = u(x) * std::conj(v(g.mul(x, yi)));
    a.data().col(y) = g.analysis() * w;
  }
  return a;
}

TFFunction cohen_transform(const CohenKernel& k, const Signal& u, const Signal& v) {
  require_same_group(k.group(), u.group());
  return inverse_symplectic_fourier(pointwise_product(k.phi, ambiguity_transform(u, v)));
}

TFFunction cohen_transform_direct(const CohenKernel& k, const Signal& u, const Signal& v) {
  require_same_group(k.group(), u.group());
  require_same_group(u.group(), v.group());
  const Group& g = u.group();
  const int n = g.order();
  const double inv_n = 1.0 / n;
  const TimeLagKernel lag = ambiguity_to_timelag(k.phi);

  // t(x, y) = (1/|G|) sum_z k(z^{-1} x, y) u(z) conj(v(z y^{-1}))
  Matrix t = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int yi = g.inv(y);
      Complex s{};
      for (int z = 0; z < n; ++z) s += lag(g.mul(g.inv(z), x), y) * u(z) * std::conj(v(g.mul(z, yi)));
      t(x, y) = s * inv_n;
    }

  TFFunction d(u.group_ptr());
  for (int x = 0; x < n; ++x)
    for (int e = 0; e < g.irrep_count(); ++e) {
      Matrix acc = Matrix::Zero(g.dim(e), g.dim(e));
      for (int y = 0; y < n; ++y) acc += t(x, y) * g.irrep(e)(y).adjoint();
      d.block(x, e) = acc * inv_n;
    }
  return d;
}

CohenKernel conjugate_kernel(const CohenKernel& k) {
  const Group& g = k.group();
  const int n = g.order();
  const TimeLagKernel lag = ambiguity_to_timelag(k.phi);
  Matrix c(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) c(x, y) = std::conj(lag(g.mul(y, x), g.inv(y)));
  return {k.name + "*", timelag_to_ambiguity(TimeLagKernel(k.group_ptr(), std::move(c))), {}};
}

CohenKernel kn_kernel(const GroupPtr& g) { return {"kn", identity_ambiguity(g), {}}; }

CohenKernel anti_kn_kernel(const GroupPtr& g) {
  AmbiguityFunction phi(g);
  for (int y = 0; y < g->order(); ++y)
    for (int xi = 0; xi < g->irrep_count(); ++xi) phi.block(y, xi) = g->irrep(xi)(y);
  return {"anti-kn", std::move(phi), {}};
}

Complex born_jordan_cyclic_value(int n, int xi, int y) {
  if (xi % n == 0 || y % n == 0) return 1.0;
  const Complex num = (kI * (2.0 * kPi / n)) * (1.0 - unit_root(static_cast<long long>(xi) * y, n));
  const Complex den = (1.0 - unit_root(xi, n)) * (1.0 - unit_root(-y, n));
  return num / den;
}

double born_jordan_cyclic_bound(int n) {
  if (n < 2) return 1.0;
  return (2.0 * kPi / n) / std::abs(1.0 - unit_root(1, n));
}

CohenKernel born_jordan_cyclic_kernel(const GroupPtr& g) {
  const int n = require_cyclic(*g, "born-jordan kernel");
  AmbiguityFunction phi(g);
  for (int y = 0; y < n; ++y)
    for (int xi = 0; xi < n; ++xi) phi.block(y, xi)(0, 0) = born_jordan_cyclic_value(n, xi, y);
  return {"born-jordan", std::move(phi), {}};
}

Signal position_label(const GroupPtr& g) {
  const int n = require_cyclic(*g, "position label");
  auto f = Signal::zeros(g);
  for (int x = 0; x < n; ++x) f(x) = static_cast<double>(x) / n;
  return f;
}

Signal momentum_label(const GroupPtr& g) {
  const int n = require_cyclic(*g, "momentum label");
  const auto fh = fourier(position_label(g));
  auto out = Signal::zeros(g);
  for (int y = 0; y < n; ++y) out(y) = static_cast<double>(n) * fh.packed()[(n - y) % n];
  return out;
}

namespace {

void check_commutator_inputs(const Signal& f, const Signal& g) {
  require_same_group(f.group(), g.group());
  require_cyclic(f.group(), "commutator kernel");
  const double fs = std::max(1.0, f.values().cwiseAbs().maxCoeff());
  if (f.values().imag().cwiseAbs().maxCoeff() > 1e-12 * fs) throw Error("commutator kernel: f must be real-valued");
  const auto gh = fourier(g);
  const double gs = std::max(1.0, gh.packed().cwiseAbs().maxCoeff());
  if (gh.packed().imag().cwiseAbs().maxCoeff() > 1e-12 * gs)
    throw Error("commutator kernel: the Fourier transform of g must be real-valued");
}

}  // namespace

CohenKernel commutator_kernel(const Signal& f, const Signal& g) {
  check_commutator_inputs(f, g);
  const Group& grp = f.group();
  const int n = grp.order();
  // operator kernel K(x, y) = i 2 pi (f(y) - f(x)) g(x - y), then lag(x, y) = conj(K(-x, -x - y))
  auto op = [&](int x, int y) { return kI * (2.0 * kPi) * (f(y) - f(x)) * g((x - y + n) % n); };
  Matrix lag(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) lag(x, y) = std::conj(op((n - x) % n, (2 * n - x - y) % n));
  return {"commutator", timelag_to_ambiguity(TimeLagKernel(f.group_ptr(), std::move(lag))), {}};
}

AmbiguityFunction commutator_kernel_closed_form(const Signal& f, const Signal& g) {
  check_commutator_inputs(f, g);
  const int n = f.group().order();
  const auto fh = fourier(f);
  AmbiguityFunction phi(f.group_ptr());
  for (int y = 0; y < n; ++y)
    for (int xi = 0; xi < n; ++xi)
      phi.block(y, xi)(0, 0) = kI * (2.0 * kPi) * fh.packed()[(n - xi) % n] *
                               (1.0 - unit_root(static_cast<long long>(xi) * y, n)) * std::conj(g(y));
  return phi;
}

CohenKernel margin_fix_kernel(const GroupPtr& g) {
  AmbiguityFunction phi(g);
  for (int y = 0; y < g->order(); ++y)
    for (int xi = 0; xi < g->irrep_count(); ++xi)
      if (xi == g->trivial() || y == g->identity()) phi.block(y, xi).setIdentity();
  return {"margin-fix", std::move(phi), {}};
}

CohenKernel add_kernels(const CohenKernel& first, const CohenKernel& second, OverlapPolicy policy) {
  require_same_group(first.group(), second.group());
  const Group& g = first.group();
  CohenKernel out{first.name + "+" + second.name, first.phi, first.warnings};
  out.warnings.insert(out.warnings.end(), second.warnings.begin(), second.warnings.end());
  if (policy == OverlapPolicy::sum) {
    out.phi.data() += second.phi.data();
    return out;
  }
  for (int y = 0; y < g.order(); ++y)
    for (int xi = 0; xi < g.irrep_count(); ++xi)
      if (!block_is_zero(second.phi.block(y, xi))) out.phi.block(y, xi) = second.phi.block(y, xi);
  return out;
}

TFFunction stft(const Signal& w, const Signal& u) {
  require_same_group(w.group(), u.group());
  const Group& g = u.group();
  const int n = g.order();
  TFFunction s(u.group_ptr());
  Vector col(n);
  for (int x = 0; x < n; ++x) {
    const int xi = g.inv(x);
    for (int y = 0; y < n; ++y) col[y] = u(y) * std::conj(w(g.mul(xi, y)));
    s.data().col(x) = g.analysis() * col;
  }
  return s;
}

CohenKernel spectrogram_kernel(const Signal& w) {
  const Group& g = w.group();
  AmbiguityFunction phi = ambiguity_transform(w, w);
  for (int y = 0; y < g.order(); ++y)
    for (int xi = 0; xi < g.irrep_count(); ++xi) phi.block(y, xi) = phi.block(y, xi).adjoint().eval();
  CohenKernel k{"spectrogram", std::move(phi), {}};
  const double nw = norm(w);
  if (std::abs(nw - 1.0) > 1e-12) k.warnings.push_back("window norm is " + std::to_string(nw) + ", not 1");
  return k;
}

Signal gaussian_window(const GroupPtr& g, double sigma) {
  const int n = require_cyclic(*g, "gaussian window");
  if (!(sigma > 0.0)) throw Error("gaussian window width must be positive");
  auto w = Signal::zeros(g);
  for (int x = 0; x < n; ++x) {
    const double d = std::min(x, n - x) / sigma;
    w(x) = std::exp(-kPi * d * d);
  }
  w.values() /= norm(w);
  return w;
}

int half_index(int n, int y) {
  if (n % 2 == 0) throw Error("halving map needs an odd cyclic order");
  const long long r = (static_cast<long long>(n + 1) / 2 * y) % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

CohenKernel wigner_kernel_odd_cyclic(const GroupPtr& g) {
  const int n = require_cyclic(*g, "wigner kernel");
  if (n % 2 == 0) throw Error("wigner kernel needs an odd cyclic order");
  AmbiguityFunction phi(g);
  for (int y = 0; y < n; ++y)
    for (int xi = 0; xi < n; ++xi)
      phi.block(y, xi)(0, 0) = unit_root(static_cast<long long>(xi) * half_index(n, y), n);
  return {"wigner-odd", std::move(phi), {}};
}

TFFunction wigner_odd_cyclic(const Signal& u, const Signal& v) {
  require_same_group(u.group(), v.group());
  const int n = require_cyclic(u.group(), "wigner transform");
  if (n % 2 == 0) throw Error("wigner transform needs an odd cyclic order");
  TFFunction w(u.group_ptr());
  for (int x = 0; x < n; ++x)
    for (int eta = 0; eta < n; ++eta) {
      Complex s{};
      for (int y = 0; y < n; ++y) {
        const int h = half_index(n, y);
        s += unit_root(-static_cast<long long>(y) * eta, n) * u((x + h) % n) * std::conj(v((x - h + n) % n));
      }
      w.block(x, eta)(0, 0) = s / static_cast<double>(n);
    }
  return w;
}

double kernel_sup_norm(const CohenKernel& k) {
  const Group& g = k.group();
  double m = 0.0;
  for (int y = 0; y < g.order(); ++y)
    for (int xi = 0; xi < g.irrep_count(); ++xi) {
      const Matrix b = k.phi.block(y, xi);
      const double s = b.size() == 1 ? std::abs(b(0, 0)) : Eigen::JacobiSVD<Matrix>(b).singularValues()[0];
      m = std::max(m, s);
    }
  return m;
}

}  // namespace gtfa
