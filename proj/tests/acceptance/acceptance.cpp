// Acceptance runner: `acceptance <id>` evaluates one criterion and prints
// `CRITERION <id> PASS|FAIL <details>`. Exit status is 0 on PASS.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <Eigen/SVD>
#include <unistd.h>

#include "gtfa/cli.hpp"
#include "gtfa/errors.hpp"
#include "gtfa/limits.hpp"
#include "gtfa/numfmt.hpp"
#include "gtfa/properties.hpp"
#include "gtfa/quantization.hpp"
#include "gtfa/reconstruct.hpp"
#include "gtfa/signalio.hpp"
#include "gtfa/transforms.hpp"

using namespace gtfa;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
  void value(const std::string& key, double v) { detail << " " << key << "=" << format_g17(v); }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<GroupPtr> corpus() {
  std::vector<GroupPtr> out;
  for (int n : {2, 3, 4, 8, 16, 32}) out.push_back(build_cyclic(n));
  out.push_back(build_dihedral(3));
  out.push_back(build_dihedral(4));
  out.push_back(build_product(build_cyclic(2), build_dihedral(3)));
  return out;
}

double operator_norm(const GroupOperator& b) {
  const Matrix a = b.kernel() / static_cast<double>(b.group().order());
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

GroupOperator random_operator(const GroupPtr& g, std::mt19937_64& r) {
  Matrix k(g->order(), g->order());
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < k.cols(); ++j) k(i, j) = random_complex(r);
  return {g, k};
}

// Plancherel identity and Fourier inversion.
Outcome criterion_1() {
  Outcome o;
  Stopwatch clock;
  std::mt19937_64 rng(1001);
  double inner = 0.0;
  double round = 0.0;
  for (const auto& g : corpus())
    for (int t = 0; t < 100; ++t) {
      const auto u = random_signal(g, rng);
      const auto v = random_signal(g, rng);
      inner = std::max(inner, std::abs(haar_inner(u, v) - plancherel_inner(fourier(u), fourier(v))));
      round = std::max(round, (inverse_fourier(fourier(u)).values() - u.values()).cwiseAbs().maxCoeff());
    }
  const double secs = clock.seconds();
  o.value("plancherel", inner);
  o.value("roundtrip", round);
  o.value("seconds", secs);
  o.require(inner <= 1e-10, "plancherel <= 1e-10");
  o.require(round <= 1e-10, "roundtrip <= 1e-10");
  o.require(secs < 5.0, "runtime < 5 s");
  return o;
}

// Rihaczek isometry and the Moyal identity.
Outcome criterion_2() {
  Outcome o;
  std::mt19937_64 rng(1002);
  double iso = 0.0;
  double moyal = 0.0;
  for (const auto& g : corpus())
    for (int t = 0; t < 100; ++t) {
      const auto u = random_signal(g, rng);
      const auto v = random_signal(g, rng);
      const auto f = random_signal(g, rng);
      const auto h = random_signal(g, rng);
      const auto ruv = rihaczek(u, v);
      iso = std::max(iso, std::abs(tf_norm(ruv) - norm(u) * norm(v)));
      moyal = std::max(moyal, std::abs(tf_inner(ruv, rihaczek(f, h)) - haar_inner(u, f) * std::conj(haar_inner(v, h))));
    }
  o.value("isometry", iso);
  o.value("moyal", moyal);
  o.require(iso <= 1e-10, "isometry <= 1e-10");
  o.require(moyal <= 1e-10, "moyal <= 1e-10");
  return o;
}

std::vector<CohenKernel> library_kernels(const GroupPtr& g, std::mt19937_64& rng) {
  std::vector<CohenKernel> ks{kn_kernel(g), anti_kn_kernel(g), margin_fix_kernel(g)};
  auto w = random_signal(g, rng);
  w.values() /= norm(w);
  ks.push_back(spectrogram_kernel(w));
  if (const auto n = g->cyclic_order()) {
    ks.push_back(spectrogram_kernel(gaussian_window(g, std::max(1.0, *n / 8.0))));
    ks.push_back(born_jordan_cyclic_kernel(g));
    ks.push_back(commutator_kernel(position_label(g), momentum_label(g)));
    ks.push_back(integer_born_jordan_on_cyclic(g));
    if (*n % 2 == 1) ks.push_back(wigner_kernel_odd_cyclic(g));
  }
  const std::size_t base = ks.size();
  for (std::size_t i = 0; i < base; ++i) ks.push_back(conjugate_kernel(ks[i]));
  return ks;
}

// cohen_transform against the time-lag triple sum.
Outcome criterion_3() {
  Outcome o;
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  int checked = 0;
  std::vector<GroupPtr> groups = corpus();
  groups.push_back(build_cyclic(5));
  groups.push_back(build_cyclic(7));
  for (const auto& g : groups)
    for (const auto& k : library_kernels(g, rng)) {
      const auto u = random_signal(g, rng);
      const auto v = random_signal(g, rng);
      const double d = max_abs_diff(cohen_transform(k, u, v), cohen_transform_direct(k, u, v));
      if (d > 1e-9) o.detail << " " << k.name << "@" << g->name() << "=" << format_g17(d);
      worst = std::max(worst, d);
      ++checked;
    }
  o.value("max_difference", worst);
  o.detail << " kernels_checked=" << checked;
  o.require(worst <= 1e-9, "two-route difference <= 1e-9");
  return o;
}

// The property verdict table.
Outcome criterion_4() {
  Outcome o;
  int rows = 0;
  auto expect = [&](const CohenKernel& k, const std::string& label, const std::map<std::string, bool>& table) {
    for (const auto& [name, want] : table) {
      const auto r = run_property(name, k);
      ++rows;
      if (r.holds != want) o.require(false, label + " " + name + (want ? " should hold" : " should fail"));
    }
  };
  for (const auto& g : {build_cyclic(5), build_dihedral(3)})
    expect(kn_kernel(g), "kn@" + g->name(),
           {{"normalized", true},
            {"time-margins", true},
            {"freq-margins", true},
            {"symmetric", false},
            {"positive", false},
            {"unitary", true},
            {"inner", true}});
  for (const auto& g : {build_cyclic(5), build_dihedral(3)})
    expect(anti_kn_kernel(g), "anti-kn@" + g->name(), {{"unitary", true}, {"freq-margins", true}});
  for (int n = 2; n <= 16; ++n)
    expect(born_jordan_cyclic_kernel(build_cyclic(n)), "born-jordan@Z" + std::to_string(n),
           {{"normalized", true},
            {"time-margins", true},
            {"freq-margins", true},
            {"symmetric", true},
            {"unitary", false}});
  {
    auto g = build_cyclic(16);
    expect(spectrogram_kernel(gaussian_window(g, 1.0)), "spectrogram@Z16",
           {{"normalized", true}, {"positive", true}, {"time-margins", false}, {"freq-margins", false}});
  }
  expect(wigner_kernel_odd_cyclic(build_cyclic(5)), "wigner-odd@Z5",
         {{"symmetric", true}, {"unitary", true}, {"time-margins", true}, {"freq-margins", true}});
  o.detail << " verdicts_checked=" << rows;
  return o;
}

// Supremum of the cyclic Born-Jordan kernel.
Outcome criterion_5() {
  Outcome o;
  double match = 0.0;
  double largest = 0.0;
  bool decreasing = true;
  double previous = INFINITY;
  double last = 0.0;
  for (int n = 2; n <= 64; ++n) {
    const auto k = born_jordan_cyclic_kernel(build_cyclic(n));
    const double sup = k.phi.data().cwiseAbs().maxCoeff();
    const double closed = (2.0 * kPi / n) / std::abs(1.0 - std::polar(1.0, 2.0 * kPi / n));
    match = std::max(match, std::abs(sup - closed));
    largest = std::max(largest, sup);
    if (!(sup < previous) || !(sup > 1.0)) decreasing = false;
    previous = sup;
    last = sup;
  }
  o.value("closed_form_difference", match);
  o.value("largest", largest);
  o.value("sup_at_64", last);
  o.require(match <= 1e-12, "sup equals closed form within 1e-12");
  o.require(largest <= kPi / 2.0 + 1e-15, "sup <= pi/2");
  o.require(decreasing, "strictly decreasing and above 1");
  o.require(last - 1.0 < 1e-3, "approaches 1");
  return o;
}

// Invertible exactly for prime orders.
Outcome criterion_6() {
  Outcome o;
  Stopwatch clock;
  std::mt19937_64 rng(1006);
  double round = 0.0;
  for (int n : {2, 3, 5, 7, 11, 13}) {
    auto g = build_cyclic(n);
    const auto k = born_jordan_cyclic_kernel(g);
    const auto b = random_operator(g, rng);
    const auto back = quantize(k, dequantize(k, b));
    round = std::max(round, operator_max_abs(GroupOperator(g, back.kernel() - b.kernel())));
    o.require(!null_symbol_witness(k).has_value(), "no witness for prime " + std::to_string(n));
  }
  double witness = 0.0;
  for (int n : {4, 6, 8, 9, 12}) {
    auto g = build_cyclic(n);
    const auto k = born_jordan_cyclic_kernel(g);
    bool threw = false;
    try {
      dequantize(k, random_operator(g, rng));
    } catch (const SingularKernel& e) {
      threw = !e.pairs().empty();
    }
    o.require(threw, "SingularKernel for " + std::to_string(n));
    const auto w = null_symbol_witness(k);
    if (!w || tf_norm(*w) == 0.0) {
      o.require(false, "witness for " + std::to_string(n));
      continue;
    }
    witness = std::max(witness, operator_norm(quantize(k, *w)));
  }
  const double secs = clock.seconds();
  o.value("prime_roundtrip", round);
  o.value("witness_norm", witness);
  o.value("seconds", secs);
  o.require(round <= 1e-8, "prime round trip <= 1e-8");
  o.require(witness <= 1e-10, "witness quantization norm <= 1e-10");
  o.require(secs < 10.0, "runtime < 10 s");
  return o;
}

// Phase retrieval from the cyclic Born-Jordan distribution.
Outcome criterion_7() {
  Outcome o;
  Stopwatch clock;
  std::mt19937_64 rng(1007);
  double distance = 0.0;
  double phase = 0.0;
  for (int n = 2; n <= 32; ++n) {
    auto g = build_cyclic(n);
    const auto k = born_jordan_cyclic_kernel(g);
    for (int t = 0; t < 200; ++t) {
      auto u = random_signal(g, rng);
      // zero-free: keep every sample away from the origin
      for (int x = 0; x < n; ++x)
        if (std::abs(u(x)) < 1e-3) u(x) = 1e-3;
      const auto a = phase_retrieve(cohen_distribution(k, u));
      distance = std::max(distance, class_distance(u, a.signal));
      if (t % 20 == 0) {
        const Signal turned(g, u.values() * std::polar(1.0, 0.1 * t + 0.7));
        const auto b = phase_retrieve(cohen_distribution(k, turned));
        phase = std::max(phase, (a.signal.values() - b.signal.values()).cwiseAbs().maxCoeff());
      }
    }
  }
  const double secs = clock.seconds();
  o.value("class_distance", distance);
  o.value("phase_invariance", phase);
  o.value("seconds", secs);
  o.require(distance <= 1e-7, "class distance <= 1e-7");
  o.require(phase <= 1e-12, "global-phase invariance <= 1e-12");
  o.require(secs < 30.0, "runtime < 30 s");
  return o;
}

// Cyclic kernel sampled at large N against the integer-limit kernel.
Outcome criterion_8a() {
  Outcome o;
  const int n = 1024;
  double worst = 0.0;
  for (int y = -3; y <= 3; ++y) {
    if (y == 0) continue;
    for (int j = 1; j < 16; ++j)
      worst = std::max(worst, std::abs(born_jordan_cyclic_value(n, j * n / 16, (y + n) % n) - phi_DZ(j / 16.0, y)));
  }
  o.value("max_difference", worst);
  o.require(worst <= 0.01, "difference <= 0.01");
  return o;
}

// Fourier series of the time-lag kernel against the closed integer kernel.
Outcome criterion_8b() {
  Outcome o;
  double worst = 0.0;
  for (long y = -12; y <= 12; ++y)
    for (int j = 0; j < 64; ++j) {
      const double xi = j / 64.0;
      Complex s{};
      for (long x = -16; x <= 16; ++x) s += std::polar(varphi_DZ(x, y), -2.0 * kPi * xi * static_cast<double>(x));
      worst = std::max(worst, std::abs(s - phi_DZ(xi, y)));
    }
  o.value("max_difference", worst);
  o.require(worst <= 1e-9, "difference <= 1e-9");
  return o;
}

std::vector<ZSignal> limit_signals() {
  std::vector<ZSignal> out;
  ZSignal spike;
  spike.values = Vector::Ones(1);
  out.push_back(spike);
  ZSignal pair;
  pair.offset = -2;
  pair.values = Vector::Zero(5);
  pair.values[0] = 1.0;
  pair.values[4] = Complex(-0.5, 0.5);
  out.push_back(pair);
  ZSignal chirp;
  chirp.values.resize(32);
  for (int t = 0; t < 32; ++t) chirp.values[t] = std::polar(1.0, kPi * (0.1 * t + 0.01 * t * t));
  out.push_back(chirp);
  return out;
}

// Cyclic Born-Jordan distribution on a large cyclic group against Q_Z.
Outcome criterion_8c() {
  Outcome o;
  double worst = 0.0;
  for (const auto& u : limit_signals()) {
    const int n = static_cast<int>(std::max<long>(96, 3 * u.size()));
    const auto cmp = cyclic_vs_z_comparison(u, n);
    o.detail << " residual[L=" << u.size() << ",N=" << n << "]=" << format_g17(cmp.residual);
    worst = std::max(worst, cmp.residual);
  }
  o.value("max_residual", worst);
  o.require(worst <= 1e-6, "central-region residual <= 1e-6");
  return o;
}

// Same comparison with the integer kernel carried onto Z/N.
Outcome criterion_8c_two_route() {
  Outcome o;
  double worst = 0.0;
  for (const auto& u : limit_signals()) {
    const int n = static_cast<int>(std::max<long>(96, 3 * u.size()));
    worst = std::max(worst, cyclic_vs_z_comparison(u, n).two_route_residual);
  }
  o.value("max_residual", worst);
  o.require(worst <= 1e-6, "two-route residual <= 1e-6");
  return o;
}

// Summing D[v] over an orthonormal basis gives the identity symbol.
Outcome criterion_9() {
  Outcome o;
  std::mt19937_64 rng(1009);
  double worst = 0.0;
  for (const auto& g : {build_cyclic(4), build_cyclic(5), build_dihedral(3)}) {
    const int n = g->order();
    const auto k = kn_kernel(g);
    // standard basis, and a random unitary rotation of it (unit Haar norm means |G| in the sum of squares)
    Matrix z(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z(i, j) = random_complex(rng);
    const Matrix q = Eigen::HouseholderQR<Matrix>(z).householderQ();
    for (const Matrix& basis : {Matrix(Matrix::Identity(n, n)), q}) {
      TFFunction sum(g);
      for (int a = 0; a < n; ++a) {
        const Signal v(g, basis.col(a) * std::sqrt(static_cast<double>(n)));
        sum.data() += cohen_distribution(k, v).data();
      }
      const Matrix diff = kn_operator(sum).kernel() - GroupOperator::identity(g).kernel();
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
    o.require(check_onb_resolution(k).holds, "property checker on " + g->name());
  }
  o.value("max_difference", worst);
  o.require(worst <= 1e-8, "identity within 1e-8");
  return o;
}

RealMatrix read_pgm(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  RealMatrix m(h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) in >> m(r, c);
  return m;
}

// Figure pipeline: stable bytes, golden match and the chirp ridge.
Outcome criterion_10() {
  Outcome o;
  const auto tmp = std::filesystem::temp_directory_path() / ("gtfa_acceptance_10_" + std::to_string(::getpid()));
  const std::string first = (tmp / "first").string();
  const std::string second = (tmp / "second").string();
  const std::string golden = std::string(GTFA_TEST_DATA) + "/golden/chirp256";
  const int rc1 = run_cli({"figures", "--synthetic", "chirp", "--samples", "256", "--outdir", first});
  const int rc2 = run_cli({"figures", "--synthetic", "chirp", "--samples", "256", "--outdir", second});
  o.require(rc1 == 0 && rc2 == 0, "figures command exits 0");
  if (rc1 == 0 && rc2 == 0) {
    for (const char* name : {"qz.pgm", "qcyclic.pgm", "spectrogram.pgm"}) {
      const auto a = read_text_file(first + "/" + name);
      o.require(a == read_text_file(second + "/" + name), std::string(name) + " identical across runs");
      o.require(a == read_text_file(golden + "/" + name), std::string(name) + " matches golden");
    }
    const RealMatrix spec = read_pgm(first + "/spectrogram.pgm");
    o.require(spec.minCoeff() >= 0 && spec.maxCoeff() <= 255, "pixels within [0, 255]");
    // darkest pixel in the positive-frequency half of each interior column
    int worst = 0;
    const int n = static_cast<int>(spec.cols());
    for (int t = n / 8; t < n - n / 8; ++t) {
      Eigen::Index row = 0;
      spec.col(t).segment(1, n / 2 - 1).minCoeff(&row);
      const double f = 0.1 + 0.25 * t / (n - 1.0);
      const int expect = static_cast<int>(std::lround(f * n));
      worst = std::max(worst, std::abs(static_cast<int>(row) + 1 - expect));
    }
    o.detail << " ridge_offset_bins=" << worst;
    o.require(worst <= 1, "ridge within 1 bin");
  }
  std::error_code ec;
  std::filesystem::remove_all(tmp, ec);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::function<Outcome()>> criteria = {
      {"1", criterion_1},   {"2", criterion_2},   {"3", criterion_3},
      {"4", criterion_4},   {"5", criterion_5},   {"6", criterion_6},
      {"7", criterion_7},   {"8a", criterion_8a}, {"8b", criterion_8b},
      {"8c", criterion_8c}, {"8c-two-route", criterion_8c_two_route},
      {"9", criterion_9},   {"10", criterion_10},
  };
  std::vector<std::string> ids;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) ids.emplace_back(argv[i]);
  } else {
    for (const auto& [id, fn] : criteria) ids.push_back(id);
  }
  bool all = true;
  for (const auto& id : ids) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion '" << id << "'\n";
      return 2;
    }
    Outcome o;
    try {
      o = it->second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::cout << "CRITERION " << id << (o.pass ? " PASS" : " FAIL") << o.detail.str() << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
