#include "gtfa/harmonic.hpp"

#include <cmath>

#include "gtfa/errors.hpp"

namespace gtfa {

Signal::Signal(GroupPtr group, Vector values) : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->order())
    throw DimensionMismatch("signal length " + std::to_string(values_.size()) + " differs from group order " +
                            std::to_string(group_->order()));
}

Signal Signal::zeros(GroupPtr group) {
  const int n = group->order();
  return {std::move(group), Vector::Zero(n)};
}

FourierCoefficients::FourierCoefficients(GroupPtr group, Vector packed)
    : group_(std::move(group)), packed_(std::move(packed)) {
  if (packed_.size() != group_->order()) throw DimensionMismatch("packed coefficient length differs from |G|");
}

FourierCoefficients FourierCoefficients::zeros(GroupPtr group) {
  const int n = group->order();
  return {std::move(group), Vector::Zero(n)};
}

void require_same_group(const Group& a, const Group& b) {
  if (&a != &b) throw GroupMismatch();
}

Complex haar_inner(const Signal& u, const Signal& v) {
  require_same_group(u.group(), v.group());
  Complex s{};
  for (int x = 0; x < u.size(); ++x) s += u(x) * std::conj(v(x));
  return s / static_cast<double>(u.size());
}

double norm(const Signal& u) { return std::sqrt(haar_inner(u, u).real()); }

FourierCoefficients fourier(const Signal& u) {
  const Group& g = u.group();
  const int n = g.order();
  auto c = FourierCoefficients::zeros(u.group_ptr());
  for (int e = 0; e < g.irrep_count(); ++e) {
    auto blk = c.block(e);
    for (int x = 0; x < n; ++x) blk += u(x) * g.irrep(e)(x).adjoint();
    blk /= static_cast<double>(n);
  }
  return c;
}

Signal inverse_fourier(const FourierCoefficients& c) {
  const Group& g = c.group();
  auto u = Signal::zeros(c.group_ptr());
  for (int x = 0; x < g.order(); ++x) {
    Complex s{};
    for (int e = 0; e < g.irrep_count(); ++e)
      s += static_cast<double>(g.dim(e)) * (g.irrep(e)(x) * c.block(e)).trace();
    u(x) = s;
  }
  return u;
}

Complex nc_integral(const FourierCoefficients& c) {
  const Group& g = c.group();
  Complex s{};
  for (int e = 0; e < g.irrep_count(); ++e) s += static_cast<double>(g.dim(e)) * c.block(e).trace();
  return s;
}

Complex plancherel_inner(const FourierCoefficients& c, const FourierCoefficients& d) {
  require_same_group(c.group(), d.group());
  const Group& g = c.group();
  Complex s{};
  for (int e = 0; e < g.irrep_count(); ++e)
    s += static_cast<double>(g.dim(e)) * (c.block(e) * d.block(e).adjoint()).trace();
  return s;
}

Signal convolve(const Signal& u, const Signal& v) {
  require_same_group(u.group(), v.group());
  const Group& g = u.group();
  const int n = g.order();
  auto w = Signal::zeros(u.group_ptr());
  for (int x = 0; x < n; ++x) {
    Complex s{};
    for (int y = 0; y < n; ++y) s += u(g.mul(x, g.inv(y))) * v(y);
    w(x) = s / static_cast<double>(n);
  }
  return w;
}

Signal delta_signal(const GroupPtr& g) {
  auto d = Signal::zeros(g);
  d(g->identity()) = static_cast<double>(g->order());
  return d;
}

Signal constant_signal(const GroupPtr& g, Complex value) {
  return {g, Vector::Constant(g->order(), value)};
}

Signal left_translate(const Signal& u, int y) {
  const Group& g = u.group();
  auto w = Signal::zeros(u.group_ptr());
  const int yi = g.inv(y);
  for (int x = 0; x < g.order(); ++x) w(x) = u(g.mul(yi, x));
  return w;
}

Complex random_complex(std::mt19937_64& rng) {
  // Box-Muller on 53-bit uniforms; avoids implementation-defined distributions
  auto uniform = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  const double r = std::sqrt(-std::log(uniform()));
  const double t = 2.0 * kPi * uniform();
  return {r * std::cos(t), r * std::sin(t)};
}

Signal random_signal(const GroupPtr& g, std::mt19937_64& rng) {
  auto u = Signal::zeros(g);
  for (int x = 0; x < g->order(); ++x) u(x) = random_complex(rng);
  return u;
}

FourierCoefficients random_coefficients(const GroupPtr& g, std::mt19937_64& rng) {
  auto c = FourierCoefficients::zeros(g);
  for (int r = 0; r < g->order(); ++r) c.packed()[r] = random_complex(rng);
  return c;
}

}  // namespace gtfa
