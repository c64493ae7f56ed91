#pragma once

#include <optional>

#include "gtfa/transforms.hpp"

namespace gtfa {

/// Linear operator on signals given by a dense kernel with Haar-weighted action
/// (A v)(x) = (1/|G|) sum_y K(x, y) v(y).
class GroupOperator {
 public:
  GroupOperator(GroupPtr group, Matrix kernel);
  /// K(x, y) = |G| [x = y].
  static GroupOperator identity(const GroupPtr& g);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Matrix& kernel() const { return kernel_; }
  Matrix& kernel() { return kernel_; }

  Signal apply(const Signal& v) const;

 private:
  GroupPtr group_;
  Matrix kernel_;
};

/// Kernel of A B, i.e. (1/|G|) K_A K_B.
GroupOperator compose(const GroupOperator& a, const GroupOperator& b);
/// Hilbert-space adjoint: K*(x, y) = conj(K(y, x)).
GroupOperator adjoint(const GroupOperator& a);
/// Blockwise adjoint symbol a*(x, eta) = a(x, eta)^*.
TFFunction symbol_adjoint(const TFFunction& a);

/// (a^R v)(x) = sum_eta d_eta tr(eta(x) a(x, eta) v^(eta)); kernel
/// K(x, y) = sum_eta d_eta tr(a(x, eta) eta(y^{-1} x)).
GroupOperator kn_operator(const TFFunction& a);
/// a(x, eta) = eta(x)^* (B eta)(x); inverse of kn_operator.
TFFunction kn_symbol(const GroupOperator& b);

/// a^D = (F^{-1}(phi^* Fa))^R, the operator with <u, a^D v> = <D(u, v), a>.
GroupOperator quantize(const CohenKernel& k, const TFFunction& a);

/// Ambiguity pairs (xi, y) whose kernel block is treated as singular.
std::vector<std::pair<int, int>> singular_blocks(const CohenKernel& k);
/// Symbol b with quantize(k, b) = B. Throws SingularKernel when some block of phi
/// is not invertible.
TFFunction dequantize(const CohenKernel& k, const GroupOperator& b);
/// Nonzero symbol annihilated by quantization, supported on one singular block
/// in the ambiguity plane; none when every block is invertible.
std::optional<TFFunction> null_symbol_witness(const CohenKernel& k);

/// (1/|G|) sum_x K(x, x).
Complex operator_trace(const GroupOperator& b);
/// (1/|G|) sum_x sum_eta d_eta tr(a(x, eta)).
Complex tf_integral(const TFFunction& a);
/// |tr(a^D) - integral of a|.
double trace_identity_check(const CohenKernel& k, const TFFunction& a);
/// (1/|G|^2) sum_{x,y} K1(x, y) conj(K2(x, y)).
Complex hs_inner(const GroupOperator& a, const GroupOperator& b);
double operator_max_abs(const GroupOperator& a);

/// delta^D with K(z, y) = conj(lag(z^{-1}, y^{-1} z)).
GroupOperator original_localization(const CohenKernel& k);
/// Inverse of the above: lag(x, y) = conj(K(x^{-1}, x^{-1} y^{-1})).
CohenKernel kernel_from_localization(const GroupOperator& delta);
/// D(u,v)(x, eta) = (1/|G|^2) sum_{z,y} u(xz) eta(z)^* conj(K(z, y)) eta(y) conj(v(xy)).
TFFunction distribution_from_localization(const GroupOperator& delta, const Signal& u, const Signal& v);

}  // namespace gtfa
