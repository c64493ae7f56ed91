#include "gtfa/quantization.hpp"

#include <cmath>

#include "gtfa/errors.hpp"

namespace gtfa {

GroupOperator::GroupOperator(GroupPtr group, Matrix kernel) : group_(std::move(group)), kernel_(std::move(kernel)) {
  if (kernel_.rows() != group_->order() || kernel_.cols() != group_->order())
    throw DimensionMismatch("operator kernel must be |G| x |G|");
}

GroupOperator GroupOperator::identity(const GroupPtr& g) {
  const int n = g->order();
  return {g, Matrix::Identity(n, n) * static_cast<double>(n)};
}

Signal GroupOperator::apply(const Signal& v) const {
  require_same_group(*group_, v.group());
  return {group_, kernel_ * v.values() / static_cast<double>(group_->order())};
}

GroupOperator compose(const GroupOperator& a, const GroupOperator& b) {
  require_same_group(a.group(), b.group());
  return {a.group_ptr(), a.kernel() * b.kernel() / static_cast<double>(a.group().order())};
}

GroupOperator adjoint(const GroupOperator& a) { return {a.group_ptr(), a.kernel().adjoint()}; }

TFFunction symbol_adjoint(const TFFunction& a) {
  const Group& g = a.group();
  TFFunction out(a.group_ptr());
  for (int x = 0; x < g.order(); ++x)
    for (int e = 0; e < g.irrep_count(); ++e) out.block(x, e) = a.block(x, e).adjoint();
  return out;
}

GroupOperator kn_operator(const TFFunction& a) {
  const Group& g = a.group();
  const int n = g.order();
  Matrix k(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int t = g.mul(g.inv(y), x);
      Complex s{};
      for (int e = 0; e < g.irrep_count(); ++e)
        s += static_cast<double>(g.dim(e)) * (a.block(x, e) * g.irrep(e)(t)).trace();
      k(x, y) = s;
    }
  return {a.group_ptr(), std::move(k)};
}

TFFunction kn_symbol(const GroupOperator& b) {
  const Group& g = b.group();
  const int n = g.order();
  TFFunction a(b.group_ptr());
  for (int x = 0; x < n; ++x) {
    const int xi = g.inv(x);
    for (int e = 0; e < g.irrep_count(); ++e) {
      Matrix acc = Matrix::Zero(g.dim(e), g.dim(e));
      for (int y = 0; y < n; ++y) acc += b.kernel()(x, y) * g.irrep(e)(g.mul(xi, y));
      a.block(x, e) = acc / static_cast<double>(n);
    }
  }
  return a;
}

namespace {

AmbiguityFunction adjoint_blocks(const AmbiguityFunction& phi) {
  const Group& g = phi.group();
  AmbiguityFunction out(phi.group_ptr());
  for (int y = 0; y < g.order(); ++y)
    for (int xi = 0; xi < g.irrep_count(); ++xi) out.block(y, xi) = phi.block(y, xi).adjoint();
  return out;
}

}  // namespace

GroupOperator quantize(const CohenKernel& k, const TFFunction& a) {
  require_same_group(k.group(), a.group());
  const auto fb = pointwise_product(adjoint_blocks(k.phi), symplectic_fourier(a));
  return kn_operator(inverse_symplectic_fourier(fb));
}

std::vector<std::pair<int, int>> singular_blocks(const CohenKernel& k) {
  const Group& g = k.group();
  const double scale = kernel_sup_norm(k);
  std::vector<std::pair<int, int>> out;
  for (int xi = 0; xi < g.irrep_count(); ++xi)
    for (int y = 0; y < g.order(); ++y) {
      const Eigen::JacobiSVD<Matrix> svd(Matrix(k.phi.block(y, xi)));
      const auto& s = svd.singularValues();
      const double smin = s[s.size() - 1];
      if (scale == 0.0 || smin < 1e-12 * scale || s[0] > 1e12 * smin) out.emplace_back(xi, y);
    }
  return out;
}

TFFunction dequantize(const CohenKernel& k, const GroupOperator& b) {
  require_same_group(k.group(), b.group());
  auto bad = singular_blocks(k);
  if (!bad.empty()) throw SingularKernel(std::move(bad));
  const Group& g = k.group();
  AmbiguityFunction fa = symplectic_fourier(kn_symbol(b));
  for (int y = 0; y < g.order(); ++y)
    for (int xi = 0; xi < g.irrep_count(); ++xi) {
      const Matrix p = k.phi.block(y, xi).adjoint();
      fa.block(y, xi) = p.fullPivLu().solve(Matrix(fa.block(y, xi)));
    }
  return inverse_symplectic_fourier(fa);
}

std::optional<TFFunction> null_symbol_witness(const CohenKernel& k) {
  const auto bad = singular_blocks(k);
  if (bad.empty()) return std::nullopt;
  const auto [xi, y] = bad.front();
  const Matrix p = k.phi.block(y, xi).adjoint();
  const Eigen::JacobiSVD<Matrix> svd(p, Eigen::ComputeFullV);
  // phi^* c = 0 for the right singular vector of the smallest singular value
  const Vector c = svd.matrixV().col(p.cols() - 1);
  AmbiguityFunction fb(k.group_ptr());
  fb.block(y, xi).col(0) = c;
  return inverse_symplectic_fourier(fb);
}

Complex operator_trace(const GroupOperator& b) {
  return b.kernel().diagonal().sum() / static_cast<double>(b.group().order());
}

Complex tf_integral(const TFFunction& a) {
  const Group& g = a.group();
  Complex s{};
  for (int x = 0; x < g.order(); ++x)
    for (int e = 0; e < g.irrep_count(); ++e) s += static_cast<double>(g.dim(e)) * a.block(x, e).trace();
  return s / static_cast<double>(g.order());
}

double trace_identity_check(const CohenKernel& k, const TFFunction& a) {
  return std::abs(operator_trace(quantize(k, a)) - tf_integral(a));
}

Complex hs_inner(const GroupOperator& a, const GroupOperator& b) {
  require_same_group(a.group(), b.group());
  const double n = a.group().order();
  return (a.kernel().array() * b.kernel().array().conjugate()).sum() / (n * n);
}

double operator_max_abs(const GroupOperator& a) { return a.kernel().cwiseAbs().maxCoeff(); }

GroupOperator original_localization(const CohenKernel& k) {
  const Group& g = k.group();
  const int n = g.order();
  const TimeLagKernel lag = ambiguity_to_timelag(k.phi);
  Matrix kz(n, n);
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y) kz(z, y) = std::conj(lag(g.inv(z), g.mul(g.inv(y), z)));
  return {k.group_ptr(), std::move(kz)};
}

CohenKernel kernel_from_localization(const GroupOperator& delta) {
  const Group& g = delta.group();
  const int n = g.order();
  Matrix lag(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xi = g.inv(x);
      lag(x, y) = std::conj(delta.kernel()(xi, g.mul(xi, g.inv(y))));
    }
  return {"localization", timelag_to_ambiguity(TimeLagKernel(delta.group_ptr(), std::move(lag))), {}};
}

TFFunction distribution_from_localization(const GroupOperator& delta, const Signal& u, const Signal& v) {
  require_same_group(delta.group(), u.group());
  require_same_group(u.group(), v.group());
  const Group& g = u.group();
  const int n = g.order();
  const double w = 1.0 / (static_cast<double>(n) * n);
  TFFunction d(u.group_ptr());
  Matrix p(n, n);
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z)
      for (int y = 0; y < n; ++y)
        p(z, y) = u(g.mul(x, z)) * std::conj(delta.kernel()(z, y)) * std::conj(v(g.mul(x, y)));
    for (int e = 0; e < g.irrep_count(); ++e) {
      const int de = g.dim(e);
      Matrix acc = Matrix::Zero(de, de);
      for (int z = 0; z < n; ++z) {
        Matrix inner = Matrix::Zero(de, de);
        for (int y = 0; y < n; ++y) inner += p(z, y) * g.irrep(e)(y);
        acc += g.irrep(e)(z).adjoint() * inner;
      }
      d.block(x, e) = acc * w;
    }
  }
  return d;
}

}  // namespace gtfa
