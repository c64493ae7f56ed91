#include <doctest.h>

#include "gtfa/tfplane.hpp"
#include "gtfa/transforms.hpp"
#include "support.hpp"

using namespace gtfa;

TEST_CASE("symplectic Fourier transform of the trivial-frequency indicator") {
  auto g = build_dihedral(3);
  TFFunction a(g);
  for (int x = 0; x < 6; ++x) a.block(x, g->trivial())(0, 0) = 1.0;
  const auto fa = symplectic_fourier(a);
  for (int y = 0; y < 6; ++y)
    for (int xi = 0; xi < g->irrep_count(); ++xi) {
      const int d = g->dim(xi);
      Matrix expect = Matrix::Zero(d, d);
      if (xi == g->trivial()) expect(0, 0) = 1.0;
      CHECK((fa.block(y, xi) - expect).norm() < 1e-12);
    }
}

TEST_CASE("symplectic transform of a Rihaczek distribution") {
  auto g = build_cyclic(5);
  auto r = testing::rng(7);
  const auto u = random_signal(g, r);
  const auto v = random_signal(g, r);
  const auto fa = symplectic_fourier(rihaczek(u, v));
  for (int xi = 0; xi < 5; ++xi)
    for (int y = 0; y < 5; ++y) {
      Complex s{};
      for (int x = 0; x < 5; ++x) s += unit_root(-x * xi, 5) * u(x) * std::conj(v((x - y + 5) % 5));
      CHECK(std::abs(fa.block(y, xi)(0, 0) - s / 5.0) < 1e-10);
    }
}

TEST_CASE("symplectic transform round trips and is unitary") {
  auto r = testing::rng(8);
  for (const auto& g : testing::corpus()) {
    const auto a = random_tf(g, r);
    const auto b = random_tf(g, r);
    const auto fa = symplectic_fourier(a);
    CHECK(max_abs_diff(inverse_symplectic_fourier(fa), a) < 1e-10);
    CHECK(std::abs(ambiguity_inner(symplectic_fourier(b), fa) - tf_inner(b, a)) < 1e-10);
    CHECK(std::abs(ambiguity_norm(fa) - tf_norm(a)) < 1e-10);
  }
  auto g = build_dihedral(3);
  const auto idn = identity_ambiguity(g);
  CHECK(max_abs_diff(symplectic_fourier(inverse_symplectic_fourier(idn)), idn) < 1e-10);
}

TEST_CASE("TF inner product") {
  auto g = build_cyclic(7);
  auto r = testing::rng(9);
  const auto a = random_tf(g, r);
  CHECK(tf_inner(a, a).real() > 0.0);
  CHECK(std::abs(tf_inner(a, a).imag()) < 1e-12);
  CHECK(std::abs(tf_inner(TFFunction(g), TFFunction(g))) == 0.0);

  const auto u = random_signal(g, r);
  const auto v = random_signal(g, r);
  const auto f = random_signal(g, r);
  const auto h = random_signal(g, r);
  const Complex lhs = tf_inner(rihaczek(u, v), rihaczek(f, h));
  const Complex rhs = haar_inner(u, f) * std::conj(haar_inner(v, h));
  CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("TF convolution identities") {
  auto r = testing::rng(10);
  for (const auto& g : {build_cyclic(5), build_dihedral(3)}) {
    const auto a = random_tf(g, r);
    const auto psi_r = inverse_symplectic_fourier(identity_ambiguity(g));
    CHECK(max_abs_diff(tf_convolve(a, psi_r), a) < 1e-10);

    const auto fa = symplectic_fourier(a);
    const Complex lambda = fa.block(g->identity(), g->trivial())(0, 0);
    const auto c = tf_convolve(a, identity_tf(g));
    TFFunction expect(g);
    for (int x = 0; x < g->order(); ++x)
      for (int k = 0; k < g->irrep_count(); ++k)
        expect.block(x, k) = lambda * Matrix::Identity(g->dim(k), g->dim(k));
    CHECK(max_abs_diff(c, expect) < 1e-10);
  }
  auto g = build_cyclic(5);
  const auto a = random_tf(g, r);
  const auto b = random_tf(g, r);
  CHECK(max_abs_diff(tf_convolve(a, b), tf_convolve(b, a)) < 1e-10);
}

TEST_CASE("kernel representations") {
  auto g = build_dihedral(3);
  const auto lag = ambiguity_to_timelag(identity_ambiguity(g));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(std::abs(lag(x, y) - (x == 0 ? 6.0 : 0.0)) < 1e-12);

  auto r = testing::rng(11);
  AmbiguityFunction phi(g, symplectic_fourier(random_tf(g, r)).data());
  CHECK(max_abs_diff(timelag_to_ambiguity(ambiguity_to_timelag(phi)), phi) < 1e-10);

  const auto zero = timelag_to_ambiguity(TimeLagKernel(g, Matrix::Zero(6, 6)));
  CHECK(zero.data().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spectrogram lag kernel factorizes through the reflected window") {
  auto g = build_dihedral(3);
  auto r = testing::rng(12);
  auto w = random_signal(g, r);
  w.values() /= norm(w);
  const auto lag = ambiguity_to_timelag(spectrogram_kernel(w).phi);
  auto tilde = [&](int t) { return std::conj(w(g->inv(t))); };
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(std::abs(lag(x, y) - tilde(x) * std::conj(tilde(g->mul(y, x)))) < 1e-10);
}

TEST_CASE("Born-Jordan lag kernel transforms to the closed form") {
  for (int n : {4, 7}) {
    auto g = build_cyclic(n);
    const auto k = born_jordan_cyclic_kernel(g);
    const auto back = timelag_to_ambiguity(ambiguity_to_timelag(k.phi));
    for (int xi = 0; xi < n; ++xi)
      for (int y = 0; y < n; ++y) CHECK(std::abs(back.block(y, xi)(0, 0) - born_jordan_cyclic_value(n, xi, y)) < 1e-10);
  }
}
