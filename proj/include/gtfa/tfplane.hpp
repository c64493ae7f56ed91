#pragma once

#include <random>

#include "gtfa/errors.hpp"
#include "gtfa/harmonic.hpp"

namespace gtfa {

struct TimeFrequencyTag {};
struct AmbiguityTag {};

/// Matrix-valued function on a product of the group with its dual.
///
/// Storage is one |G| x |G| complex matrix: column p is the group variable
/// (time x for the time-frequency plane, lag y for the ambiguity plane) and
/// rows hold the packed dual blocks. The tag keeps the two planes apart.
template <class Tag>
class BlockField {
 public:
  explicit BlockField(GroupPtr group)
      : group_(std::move(group)), data_(Matrix::Zero(group_->order(), group_->order())) {}
  BlockField(GroupPtr group, Matrix data) : group_(std::move(group)), data_(std::move(data)) {
    if (data_.rows() != group_->order() || data_.cols() != group_->order())
      throw DimensionMismatch("block field storage must be |G| x |G|");
  }

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Matrix& data() const { return data_; }
  Matrix& data() { return data_; }

  /// Block at group point p and irrep index eta.
  Eigen::Map<const Matrix> block(int p, int eta) const {
    return {data_.col(p).data() + group_->offset(eta), group_->dim(eta), group_->dim(eta)};
  }
  Eigen::Map<Matrix> block(int p, int eta) {
    return {data_.col(p).data() + group_->offset(eta), group_->dim(eta), group_->dim(eta)};
  }

 private:
  GroupPtr group_;
  Matrix data_;
};

/// a(x, eta): blocks indexed by time x and frequency eta.
using TFFunction = BlockField<TimeFrequencyTag>;
/// A(xi, y): blocks indexed by lag y and Doppler xi; block(y, xi).
using AmbiguityFunction = BlockField<AmbiguityTag>;

/// Scalar table k(x, y) on G x G.
class TimeLagKernel {
 public:
  TimeLagKernel(GroupPtr group, Matrix values);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Matrix& values() const { return values_; }
  Matrix& values() { return values_; }
  Complex operator()(int x, int y) const { return values_(x, y); }

 private:
  GroupPtr group_;
  Matrix values_;
};

/// Fa(xi, y) = (1/|G|) sum_x xi(x)^* s(x, y), s(x, y) = sum_eta d_eta tr(eta(y) a(x, eta)).
AmbiguityFunction symplectic_fourier(const TFFunction& a);
/// a(x, eta) = (1/|G|) sum_y eta(y)^* t(x, y), t(x, y) = sum_xi d_xi tr(xi(x) A(xi, y)).
TFFunction inverse_symplectic_fourier(const AmbiguityFunction& A);

/// (1/|G|) sum_x sum_eta d_eta tr(b(x, eta) a(x, eta)^*).
Complex tf_inner(const TFFunction& b, const TFFunction& a);
double tf_norm(const TFFunction& a);
/// Inner product on the ambiguity plane; matches tf_inner under F.
Complex ambiguity_inner(const AmbiguityFunction& B, const AmbiguityFunction& A);
double ambiguity_norm(const AmbiguityFunction& A);

/// Pointwise block product (left * right) at every (xi, y).
AmbiguityFunction pointwise_product(const AmbiguityFunction& left, const AmbiguityFunction& right);
/// a * b = F^{-1}((Fb)(Fa)).
TFFunction tf_convolve(const TFFunction& a, const TFFunction& b);

/// k(x, y) = sum_xi d_xi tr(xi(x) phi(xi, y)).
TimeLagKernel ambiguity_to_timelag(const AmbiguityFunction& phi);
/// phi(xi, y) = (1/|G|) sum_x xi(x)^* k(x, y).
AmbiguityFunction timelag_to_ambiguity(const TimeLagKernel& k);

/// Identity blocks everywhere.
TFFunction identity_tf(const GroupPtr& g);
AmbiguityFunction identity_ambiguity(const GroupPtr& g);

TFFunction random_tf(const GroupPtr& g, std::mt19937_64& rng);

/// Largest entry modulus of the difference.
template <class Tag>
double max_abs_diff(const BlockField<Tag>& a, const BlockField<Tag>& b) {
  return (a.data() - b.data()).cwiseAbs().maxCoeff();
}

}  // namespace gtfa
