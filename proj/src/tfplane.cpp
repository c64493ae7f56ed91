#include "gtfa/tfplane.hpp"

#include <cmath>

namespace gtfa {

TimeLagKernel::TimeLagKernel(GroupPtr group, Matrix values) : group_(std::move(group)), values_(std::move(values)) {
  if (values_.rows() != group_->order() || values_.cols() != group_->order())
    throw DimensionMismatch("time-lag kernel must be |G| x |G|");
}

AmbiguityFunction symplectic_fourier(const TFFunction& a) {
  const Group& g = a.group();
  // s(y, x) = sum_eta d_eta tr(eta(y) a(x, eta)), then the transform in x
  const Matrix s = g.synthesis() * a.data();
  return {a.group_ptr(), g.analysis() * s.transpose()};
}

TFFunction inverse_symplectic_fourier(const AmbiguityFunction& A) {
  const Group& g = A.group();
  const Matrix t = g.synthesis() * A.data();  // t(x, y)
  return {A.group_ptr(), g.analysis() * t.transpose()};
}

namespace {

Complex weighted_inner(const Group& g, const Matrix& b, const Matrix& a) {
  const RealVector& w = g.row_weights();
  Complex s{};
  for (Eigen::Index p = 0; p < b.cols(); ++p)
    for (Eigen::Index r = 0; r < b.rows(); ++r) s += w[r] * b(r, p) * std::conj(a(r, p));
  return s / static_cast<double>(g.order());
}

}  // namespace

Complex tf_inner(const TFFunction& b, const TFFunction& a) {
  require_same_group(b.group(), a.group());
  return weighted_inner(b.group(), b.data(), a.data());
}

double tf_norm(const TFFunction& a) { return std::sqrt(tf_inner(a, a).real()); }

Complex ambiguity_inner(const AmbiguityFunction& B, const AmbiguityFunction& A) {
  require_same_group(B.group(), A.group());
  return weighted_inner(B.group(), B.data(), A.data());
}

double ambiguity_norm(const AmbiguityFunction& A) { return std::sqrt(ambiguity_inner(A, A).real()); }

AmbiguityFunction pointwise_product(const AmbiguityFunction& left, const AmbiguityFunction& right) {
  require_same_group(left.group(), right.group());
  const Group& g = left.group();
  AmbiguityFunction out(left.group_ptr());
  for (int y = 0; y < g.order(); ++y)
    for (int xi = 0; xi < g.irrep_count(); ++xi) out.block(y, xi) = left.block(y, xi) * right.block(y, xi);
  return out;
}

TFFunction tf_convolve(const TFFunction& a, const TFFunction& b) {
  return inverse_symplectic_fourier(pointwise_product(symplectic_fourier(b), symplectic_fourier(a)));
}

TimeLagKernel ambiguity_to_timelag(const AmbiguityFunction& phi) {
  return {phi.group_ptr(), phi.group().synthesis() * phi.data()};
}

AmbiguityFunction timelag_to_ambiguity(const TimeLagKernel& k) {
  return {k.group_ptr(), k.group().analysis() * k.values()};
}

TFFunction identity_tf(const GroupPtr& g) {
  TFFunction a(g);
  for (int x = 0; x < g->order(); ++x)
    for (int e = 0; e < g->irrep_count(); ++e) a.block(x, e).setIdentity();
  return a;
}

AmbiguityFunction identity_ambiguity(const GroupPtr& g) {
  AmbiguityFunction a(g);
  for (int y = 0; y < g->order(); ++y)
    for (int e = 0; e < g->irrep_count(); ++e) a.block(y, e).setIdentity();
  return a;
}

TFFunction random_tf(const GroupPtr& g, std::mt19937_64& rng) {
  TFFunction a(g);
  for (int x = 0; x < g->order(); ++x)
    for (int r = 0; r < g->order(); ++r) a.data()(r, x) = random_complex(rng);
  return a;
}

}  // namespace gtfa
