#include "gtfa/limits.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "gtfa/errors.hpp"

namespace gtfa {

namespace {

Complex turn(double t) {
  const double r = t - std::floor(t);
  return std::polar(1.0, 2.0 * kPi * r);
}

// Centred representative of x in Z/NZ: (-N/2, N/2].
long centred(long x, long n) {
  long r = ((x % n) + n) % n;
  return 2 * r > n ? r - n : r;
}

}  // namespace

int worker_count() {
  const char* env = std::getenv("GTFA_THREADS");
  long requested = 0;
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    requested = std::strtol(env, &end, 10);
    if (end == env || requested < 0) requested = 0;
  }
  if (requested > 0) return static_cast<int>(requested);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Complex phi_DT(long xi, double y) {
  Complex s{};
  if (xi > 0) {
    for (long k = 1; k <= xi; ++k) s += turn(y * static_cast<double>(k));
    return s / static_cast<double>(xi);
  }
  if (xi < 0) {
    const long m = -xi;
    for (long k = 0; k < m; ++k) s += turn(-y * static_cast<double>(k));
    return s / static_cast<double>(m);
  }
  return 0.0;
}

Complex phi_DZ(double xi, long y) {
  Complex s{};
  if (y > 0) {
    for (long k = 0; k < y; ++k) s += turn(xi * static_cast<double>(k));
    return s / static_cast<double>(y);
  }
  if (y < 0) {
    const long m = -y;
    for (long k = 1; k <= m; ++k) s += turn(-xi * static_cast<double>(k));
    return s / static_cast<double>(m);
  }
  return 0.0;
}

double varphi_DZ(long x, long y) {
  if ((-y < x && x <= 0) || (0 < x && x <= -y)) return 1.0 / static_cast<double>(std::labs(y));
  return 0.0;
}

ZTFGrid q_z_distribution(const ZSignal& u, int m, bool axis_fix) {
  if (m < 1) throw Error("frequency grid size must be at least 1");
  const long len = u.size();
  ZTFGrid grid;
  grid.x0 = u.offset;
  grid.m = m;
  grid.values = Matrix::Zero(m, std::max<long>(len, 0));
  if (len == 0) return grid;

  // exact twiddles e^{-i 2 pi r / m}
  std::vector<Complex> twiddle(m);
  for (int r = 0; r < m; ++r) twiddle[r] = unit_root(-r, m);

  // prefix sums of p_y(t) = u(t) conj(u(t - y)) per lag, so that the window
  // sums over t cost O(1) per (x, y)
  std::vector<std::vector<Complex>> prefix(len);
  for (long y = 1; y < len; ++y) {
    auto& p = prefix[y];
    p.assign(len + 1, Complex{});
    for (long i = 0; i < len; ++i) {
      const long t = u.offset + i;
      p[i + 1] = p[i] + u.values[i] * std::conj(u.at(t - y));
    }
  }
  auto window = [&](long y, long t_lo, long t_hi) {
    // sum of p_y over t in [t_lo, t_hi] clipped to the support
    const long lo = std::max(t_lo, u.offset) - u.offset;
    const long hi = std::min(t_hi, u.last()) - u.offset;
    if (hi < lo) return Complex{};
    return prefix[y][hi + 1] - prefix[y][lo];
  };

  auto column = [&](long c) {
    const long x = u.offset + c;
    std::vector<Complex> folded(m, Complex{});
    if (axis_fix) folded[0] += std::norm(u.values[c]);
    for (long y = 1; y < len; ++y) {
      // lag y > 0: t in [x, x + y - 1]
      const Complex pos = window(y, x, x + y - 1) / static_cast<double>(y);
      // lag -y: t in [x - y, x - 1] and u(t) conj(u(t + y)) = conj(p_y(t + y)), the same window
      const Complex neg = std::conj(pos);
      folded[y % m] += pos;
      folded[(m - y % m) % m] += neg;
    }
    for (int j = 0; j < m; ++j) {
      Complex s{};
      for (int r = 0; r < m; ++r) s += twiddle[(static_cast<long>(r) * j) % m] * folded[r];
      grid.values(j, c) = s;
    }
  };

  const int workers = std::max(1, std::min<int>(worker_count(), static_cast<int>(len)));
  if (workers == 1) {
    for (long c = 0; c < len; ++c) column(c);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (long c = w; c < len; c += workers) column(c);
      });
    for (auto& th : pool) th.join();
  }
  grid.max_imag = grid.values.imag().cwiseAbs().maxCoeff();
  return grid;
}

CohenKernel integer_born_jordan_on_cyclic(const GroupPtr& g, bool axis_fix) {
  const auto n = g->cyclic_order();
  if (!n) throw Error("integer Born-Jordan kernel requires a standard cyclic group");
  const long nn = *n;
  Matrix lag = Matrix::Zero(nn, nn);
  for (long x = 0; x < nn; ++x)
    for (long y = 0; y < nn; ++y) {
      double v = varphi_DZ(centred(x, nn), centred(y, nn));
      if (axis_fix && x == 0 && y == 0) v = 1.0;
      lag(x, y) = static_cast<double>(nn) * v;
    }
  return {"born-jordan-z", timelag_to_ambiguity(TimeLagKernel(g, std::move(lag))), {}};
}

Signal embed_centered(const ZSignal& u, int n) {
  auto g = build_cyclic(n);
  auto s = Signal::zeros(g);
  for (long i = 0; i < u.size(); ++i) s((n / 3 + i) % n) += u.values[i];
  return s;
}

CyclicComparison cyclic_vs_z_comparison(const ZSignal& u, int n) {
  if (n < 3 * u.size()) throw Error("cyclic comparison needs N >= 3 * support");
  const Signal s = embed_centered(u, n);
  const auto& g = s.group_ptr();
  const TFFunction qn = cohen_distribution(born_jordan_cyclic_kernel(g), s);
  const TFFunction qk = cohen_distribution(integer_born_jordan_on_cyclic(g), s);
  const ZTFGrid qz = q_z_distribution(u, n, true);

  CyclicComparison out;
  out.scale = qz.values.cwiseAbs().maxCoeff();
  const double denom = out.scale > 0.0 ? out.scale : 1.0;
  const int lo = n / 3;
  const int hi = (2 * n) / 3;
  for (int p = lo; p < hi; ++p) {
    const long x = u.offset + (p - lo);
    const long c = x - qz.x0;
    for (int k = 0; k < n; ++k) {
      const Complex z = (c >= 0 && c < qz.values.cols()) ? qz.values(k, c) : Complex{};
      out.residual = std::max(out.residual, std::abs(static_cast<double>(n) * qn.block(p, k)(0, 0) - z) / denom);
      out.two_route_residual =
          std::max(out.two_route_residual, std::abs(static_cast<double>(n) * qk.block(p, k)(0, 0) - z) / denom);
    }
  }
  return out;
}

}  // namespace gtfa
