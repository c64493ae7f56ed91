#pragma once

#include <random>

#include "gtfa/group.hpp"

namespace gtfa {

/// Complex-valued function on a finite group.
class Signal {
 public:
  Signal(GroupPtr group, Vector values);
  static Signal zeros(GroupPtr group);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Vector& values() const { return values_; }
  Vector& values() { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  Complex operator()(int x) const { return values_[x]; }
  Complex& operator()(int x) { return values_[x]; }

 private:
  GroupPtr group_;
  Vector values_;
};

/// Matrix-valued function on the unitary dual, packed per Group's layout.
class FourierCoefficients {
 public:
  FourierCoefficients(GroupPtr group, Vector packed);
  static FourierCoefficients zeros(GroupPtr group);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Vector& packed() const { return packed_; }
  Vector& packed() { return packed_; }

  Eigen::Map<const Matrix> block(int eta) const {
    return {packed_.data() + group_->offset(eta), group_->dim(eta), group_->dim(eta)};
  }
  Eigen::Map<Matrix> block(int eta) {
    return {packed_.data() + group_->offset(eta), group_->dim(eta), group_->dim(eta)};
  }

 private:
  GroupPtr group_;
  Vector packed_;
};

void require_same_group(const Group& a, const Group& b);

/// (1/|G|) sum_x u(x) conj(v(x)).
Complex haar_inner(const Signal& u, const Signal& v);
double norm(const Signal& u);

/// u^(eta) = (1/|G|) sum_x u(x) eta(x)^*.
FourierCoefficients fourier(const Signal& u);
/// u(x) = sum_eta d_eta tr(eta(x) c(eta)).
Signal inverse_fourier(const FourierCoefficients& c);
/// sum_eta d_eta tr(c(eta)); equals u(e) for c = u^.
Complex nc_integral(const FourierCoefficients& c);
/// sum_eta d_eta tr(c(eta) d(eta)^*).
Complex plancherel_inner(const FourierCoefficients& c, const FourierCoefficients& d);

/// (u * v)(x) = (1/|G|) sum_y u(x y^{-1}) v(y). On the Fourier side this is v^ u^.
Signal convolve(const Signal& u, const Signal& v);

/// Unit-mass Dirac delta: |G| at the identity, 0 elsewhere.
Signal delta_signal(const GroupPtr& g);
Signal constant_signal(const GroupPtr& g, Complex value = 1.0);

/// (pi_L(y) u)(x) = u(y^{-1} x).
Signal left_translate(const Signal& u, int y);

/// Independent standard complex Gaussian samples.
Signal random_signal(const GroupPtr& g, std::mt19937_64& rng);
FourierCoefficients random_coefficients(const GroupPtr& g, std::mt19937_64& rng);
Complex random_complex(std::mt19937_64& rng);

}  // namespace gtfa
