#pragma once

#include <string>
#include <vector>

#include "gtfa/tfplane.hpp"

namespace gtfa {

/// A Cohen-class transform D = F^{-1}(phi . FR), identified by its
/// ambiguity (Doppler-lag) kernel phi.
struct CohenKernel {
  std::string name;
  AmbiguityFunction phi;
  /// Non-fatal remarks raised at construction (e.g. a window without unit energy).
  std::vector<std::string> warnings;

  const Group& group() const { return phi.group(); }
  const GroupPtr& group_ptr() const { return phi.group_ptr(); }
};

/// R(u,v)(x, eta) = u(x) eta(x)^* v^(eta)^*.
TFFunction rihaczek(const Signal& u, const Signal& v);
/// FR(u,v)(xi, y) = (1/|G|) sum_x xi(x)^* u(x) conj(v(x y^{-1})).
AmbiguityFunction ambiguity_transform(const Signal& u, const Signal& v);

/// D(u,v) = F^{-1}(phi . FR(u,v)), kernel on the left of each block product.
TFFunction cohen_transform(const CohenKernel& k, const Signal& u, const Signal& v);
inline TFFunction cohen_distribution(const CohenKernel& k, const Signal& u) { return cohen_transform(k, u, u); }

/// Brute-force triple sum through the time-lag kernel:
/// D(u,v)(x, eta) = (1/|G|^2) sum_y eta(y)^* sum_z k(z^{-1} x, y) u(z) conj(v(z y^{-1})).
TFFunction cohen_transform_direct(const CohenKernel& k, const Signal& u, const Signal& v);

/// Kernel of D*(u,v) = D(v,u)^*: time-lag table k*(x, y) = conj(k(y x, y^{-1})).
CohenKernel conjugate_kernel(const CohenKernel& k);

CohenKernel kn_kernel(const GroupPtr& g);
/// phi(xi, y) = xi(y).
CohenKernel anti_kn_kernel(const GroupPtr& g);

/// Closed-form Born-Jordan ambiguity kernel on Z/NZ (requires a standard cyclic group).
CohenKernel born_jordan_cyclic_kernel(const GroupPtr& g);
/// Closed-form entry phi(xi, y) of the same kernel; exact zeros where xi*y = 0 mod N.
Complex born_jordan_cyclic_value(int n, int xi, int y);
/// (2 pi / N) |1 - e^{i 2 pi / N}|^{-1}, the supremum of the kernel modulus.
double born_jordan_cyclic_bound(int n);

/// Commutator kernel -i 2 pi [A, B] with (A u) = f u and (B u)^ = g^ u^ on a
/// cyclic group. f must be real and g^ real.
CohenKernel commutator_kernel(const Signal& f, const Signal& g);
/// i 2 pi f^(-xi) (1 - e^{i 2 pi xi y / N}) conj(g(y)); cross-check of the above.
AmbiguityFunction commutator_kernel_closed_form(const Signal& f, const Signal& g);
/// f(x) = x / N for 0 <= x < N.
Signal position_label(const GroupPtr& g);
/// g(y) = N f^(-y), whose Fourier transform is f.
Signal momentum_label(const GroupPtr& g);

/// phi = I on the axes xi = trivial or y = e, zero elsewhere.
CohenKernel margin_fix_kernel(const GroupPtr& g);

enum class OverlapPolicy {
  sum,      // entrywise sum everywhere
  replace,  // where the second kernel has a nonzero block, take it verbatim
};
CohenKernel add_kernels(const CohenKernel& first, const CohenKernel& second, OverlapPolicy policy);

/// G_w u(x, eta) = (1/|G|) sum_y eta(y)^* u(y) conj(w(x^{-1} y)).
TFFunction stft(const Signal& w, const Signal& u);
/// phi(xi, y) = FR(w,w)(xi, y)^*. Adds a warning when |w| != 1.
CohenKernel spectrogram_kernel(const Signal& w);

/// Unit-energy discrete Gaussian window e^{-pi (x/sigma)^2} on Z/NZ centred at 0
/// (distances taken modulo N).
Signal gaussian_window(const GroupPtr& g, double sigma);

/// Halving map on odd cyclic groups: h(y) = ((N+1)/2) y mod N.
int half_index(int n, int y);
CohenKernel wigner_kernel_odd_cyclic(const GroupPtr& g);
/// (1/N) sum_y e^{-i 2 pi y eta / N} u(x + h(y)) conj(v(x - h(y))).
TFFunction wigner_odd_cyclic(const Signal& u, const Signal& v);

/// ||phi||_{L^inf}: the largest spectral norm over all blocks.
double kernel_sup_norm(const CohenKernel& k);

}  // namespace gtfa
