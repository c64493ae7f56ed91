#include "gtfa/properties.hpp"

#include <cmath>
#include <random>

#include "gtfa/errors.hpp"
#include "gtfa/numfmt.hpp"
#include "gtfa/quantization.hpp"

namespace gtfa {

namespace {

void finish(PropertyReport& r) { r.holds = r.max_violation <= r.tolerance; }

// Records a candidate violation and its witness.
void note(PropertyReport& r, double v, int i, int j) {
  r.max_violation = std::max(r.max_violation, v);
  if (v > r.tolerance) r.witnesses.emplace_back(i, j);
}

double block_identity_defect(const Eigen::Map<const Matrix>& b) {
  return (b - Matrix::Identity(b.rows(), b.cols())).cwiseAbs().maxCoeff();
}

// Time margin: sum_eta d_eta tr D(x, eta).
Vector time_margin(const TFFunction& d) {
  const Group& g = d.group();
  Vector m = Vector::Zero(g.order());
  for (int x = 0; x < g.order(); ++x)
    for (int e = 0; e < g.irrep_count(); ++e) m[x] += static_cast<double>(g.dim(e)) * d.block(x, e).trace();
  return m;
}

}  // namespace

PropertyReport check_normalized(const CohenKernel& k, bool cross_check) {
  const Group& g = k.group();
  PropertyReport r{"normalized"};
  note(r, std::abs(k.phi.block(g.identity(), g.trivial())(0, 0) - 1.0), g.trivial(), g.identity());
  finish(r);
  if (cross_check) {
    std::mt19937_64 rng(kPropertySeed);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const auto u = random_signal(k.group_ptr(), rng);
      const auto v = random_signal(k.group_ptr(), rng);
      worst = std::max(worst, std::abs(tf_integral(cohen_transform(k, u, v)) - haar_inner(u, v)));
    }
    r.cross_check = worst;
  }
  return r;
}

PropertyReport check_time_margins(const CohenKernel& k, bool cross_check) {
  const Group& g = k.group();
  PropertyReport r{"time-margins"};
  for (int xi = 0; xi < g.irrep_count(); ++xi)
    note(r, block_identity_defect(k.phi.block(g.identity(), xi)), xi, g.identity());
  finish(r);
  if (cross_check) {
    std::mt19937_64 rng(kPropertySeed);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const auto u = random_signal(k.group_ptr(), rng);
      const auto v = random_signal(k.group_ptr(), rng);
      const Vector m = time_margin(cohen_transform(k, u, v));
      const Vector expect = u.values().cwiseProduct(v.values().conjugate());
      worst = std::max(worst, (m - expect).cwiseAbs().maxCoeff());
    }
    r.cross_check = worst;
  }
  return r;
}

PropertyReport check_frequency_margins(const CohenKernel& k, bool cross_check) {
  const Group& g = k.group();
  PropertyReport r{"freq-margins"};
  for (int y = 0; y < g.order(); ++y) note(r, std::abs(k.phi.block(y, g.trivial())(0, 0) - 1.0), g.trivial(), y);
  finish(r);
  if (cross_check) {
    std::mt19937_64 rng(kPropertySeed);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const auto u = random_signal(k.group_ptr(), rng);
      const auto v = random_signal(k.group_ptr(), rng);
      const auto d = cohen_transform(k, u, v);
      const auto uh = fourier(u);
      const auto vh = fourier(v);
      for (int e = 0; e < g.irrep_count(); ++e) {
        Matrix avg = Matrix::Zero(g.dim(e), g.dim(e));
        for (int x = 0; x < g.order(); ++x) avg += d.block(x, e);
        avg /= static_cast<double>(g.order());
        worst = std::max(worst, (avg - uh.block(e) * vh.block(e).adjoint()).cwiseAbs().maxCoeff());
      }
    }
    r.cross_check = worst;
  }
  return r;
}

PropertyReport check_symmetric(const CohenKernel& k, bool cross_check) {
  const Group& g = k.group();
  const int n = g.order();
  const TimeLagKernel lag = ambiguity_to_timelag(k.phi);
  PropertyReport r{"symmetric"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) note(r, std::abs(std::conj(lag(x, y)) - lag(g.mul(y, x), g.inv(y))), x, y);
  finish(r);
  if (cross_check) {
    std::mt19937_64 rng(kPropertySeed);
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
      const auto u = random_signal(k.group_ptr(), rng);
      worst = std::max(worst, std::abs(cohen_distribution(k, u).block(g.identity(), g.trivial())(0, 0).imag()));
    }
    r.cross_check = worst;
  }
  return r;
}

Matrix positivity_gram(const CohenKernel& k) {
  const Group& g = k.group();
  const int n = g.order();
  const TimeLagKernel lag = ambiguity_to_timelag(k.phi);
  Matrix gram(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) gram(x, y) = lag(g.inv(x), g.mul(g.inv(y), x));
  return gram;
}

PropertyReport check_positive(const CohenKernel& k, bool cross_check) {
  const Group& g = k.group();
  const int n = g.order();
  const Matrix gram = positivity_gram(k);
  PropertyReport r{"positive"};
  const double herm = (gram - gram.adjoint()).cwiseAbs().maxCoeff();
  const Matrix h = 0.5 * (gram + gram.adjoint());
  const Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const RealVector& lambda = es.eigenvalues();
  double neg = 0.0;
  for (int i = 0; i < n; ++i) {
    neg = std::max(neg, -lambda[i]);
    if (-lambda[i] > r.tolerance) r.witnesses.emplace_back(i, 0);
  }
  r.max_violation = std::max(0.0, neg) + herm;
  finish(r);
  if (cross_check) {
    std::mt19937_64 rng(kPropertySeed);
    double worst = 0.0;
    auto probe = [&](const Signal& u) {
      const Complex d = cohen_distribution(k, u).block(g.identity(), g.trivial())(0, 0);
      worst = std::max(worst, std::max(0.0, -d.real()) + std::abs(d.imag()));
    };
    for (int s = 0; s < 50; ++s) probe(random_signal(k.group_ptr(), rng));
    // localized probes reach directions random Gaussians rarely weight enough
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (const Complex c : {Complex(-1.0, 0.0), Complex(0.0, 1.0)}) {
          auto u = Signal::zeros(k.group_ptr());
          u(x) = 1.0;
          u(y) = c;
          probe(u);
        }
    r.cross_check = worst;
  }
  return r;
}

PropertyReport check_unitary(const CohenKernel& k, bool cross_check) {
  const Group& g = k.group();
  PropertyReport r{"unitary"};
  for (int xi = 0; xi < g.irrep_count(); ++xi)
    for (int y = 0; y < g.order(); ++y) {
      const Matrix b = k.phi.block(y, xi);
      note(r, (b * b.adjoint() - Matrix::Identity(b.rows(), b.cols())).cwiseAbs().maxCoeff(), xi, y);
    }
  finish(r);
  if (cross_check) {
    std::mt19937_64 rng(kPropertySeed);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const auto u = random_signal(k.group_ptr(), rng);
      const auto v = random_signal(k.group_ptr(), rng);
      const auto f = random_signal(k.group_ptr(), rng);
      const auto w = random_signal(k.group_ptr(), rng);
      const Complex lhs = tf_inner(cohen_transform(k, u, v), cohen_transform(k, f, w));
      worst = std::max(worst, std::abs(lhs - haar_inner(u, f) * std::conj(haar_inner(v, w))));
    }
    r.cross_check = worst;
  }
  return r;
}

PropertyReport check_inner_invariant(const CohenKernel& k) {
  const Group& g = k.group();
  const int n = g.order();
  PropertyReport r{"inner"};
  for (int xi = 0; xi < g.irrep_count(); ++xi)
    for (int y = 0; y < n; ++y) {
      double worst = 0.0;
      for (int z = 0; z < n; ++z) {
        const int c = g.mul(g.mul(z, y), g.inv(z));
        const Matrix& rz = g.irrep(xi)(z);
        worst = std::max(worst, (k.phi.block(c, xi) - rz * k.phi.block(y, xi) * rz.adjoint()).cwiseAbs().maxCoeff());
      }
      note(r, worst, xi, y);
    }
  finish(r);
  return r;
}

PropertyReport check_l2_bound(const CohenKernel& k) {
  PropertyReport r{"l2-bound"};
  const double bound = kernel_sup_norm(k);
  std::mt19937_64 rng(kPropertySeed);
  for (int s = 0; s < 100; ++s) {
    const auto u = random_signal(k.group_ptr(), rng);
    const auto v = random_signal(k.group_ptr(), rng);
    note(r, std::max(0.0, tf_norm(cohen_transform(k, u, v)) - bound * norm(u) * norm(v)), s, 0);
  }
  finish(r);
  return r;
}

PropertyReport check_onb_resolution(const CohenKernel& k) {
  const Group& g = k.group();
  const int n = g.order();
  PropertyReport r{"onb-resolution"};
  r.tolerance = kStatisticalTol;
  TFFunction b(k.group_ptr());
  for (int e = 0; e < g.irrep_count(); ++e)
    for (int i = 0; i < g.dim(e); ++i)
      for (int j = 0; j < g.dim(e); ++j) {
        auto v = Signal::zeros(k.group_ptr());
        for (int x = 0; x < n; ++x) v(x) = std::sqrt(static_cast<double>(g.dim(e))) * g.irrep(e)(x)(i, j);
        b.data() += cohen_distribution(k, v).data();
      }
  const Matrix diff = kn_operator(b).kernel() - GroupOperator::identity(k.group_ptr()).kernel();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) note(r, std::abs(diff(x, y)), x, y);
  finish(r);
  return r;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {"normalized", "time-margins", "freq-margins",
                                                 "symmetric",  "positive",     "unitary",
                                                 "inner",      "l2-bound",     "onb-resolution"};
  return names;
}

PropertyReport run_property(const std::string& name, const CohenKernel& k, bool cross_check) {
  if (name == "normalized") return check_normalized(k, cross_check);
  if (name == "time-margins") return check_time_margins(k, cross_check);
  if (name == "freq-margins") return check_frequency_margins(k, cross_check);
  if (name == "symmetric") return check_symmetric(k, cross_check);
  if (name == "positive") return check_positive(k, cross_check);
  if (name == "unitary") return check_unitary(k, cross_check);
  if (name == "inner") return check_inner_invariant(k);
  if (name == "l2-bound") return check_l2_bound(k);
  if (name == "onb-resolution") return check_onb_resolution(k);
  throw Error("unknown property '" + name + "'");
}

std::vector<PropertyReport> run_all_properties(const CohenKernel& k, bool cross_check) {
  std::vector<PropertyReport> out;
  for (const auto& name : property_names()) out.push_back(run_property(name, k, cross_check));
  return out;
}

std::string format_report_line(const PropertyReport& r) {
  return "PROPERTY " + r.name + (r.holds ? " HOLDS" : " FAILS") + " max_violation=" + format_g17(r.max_violation) +
         " witnesses=" + std::to_string(r.witnesses.size());
}

std::string format_report_csv(const std::vector<PropertyReport>& reports) {
  std::string s = "name,holds,max_violation,witnesses,cross_check\n";
  for (const auto& r : reports) {
    s += r.name + "," + (r.holds ? "1" : "0") + "," + format_g17(r.max_violation) + "," +
         std::to_string(r.witnesses.size()) + "," + (r.cross_check ? format_g17(*r.cross_check) : "") + "\n";
  }
  return s;
}

}  // namespace gtfa
