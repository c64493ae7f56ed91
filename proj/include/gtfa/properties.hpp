#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtfa/transforms.hpp"

namespace gtfa {

inline constexpr double kExhaustiveTol = 1e-9;
inline constexpr double kStatisticalTol = 1e-8;
inline constexpr unsigned long long kPropertySeed = 0xC0FFEE;

struct PropertyReport {
  std::string name;
  bool holds = false;
  double max_violation = 0.0;
  double tolerance = kExhaustiveTol;
  /// Offending index pairs: (xi, y) on the ambiguity plane, (x, y) for
  /// time-lag conditions, (eigenvalue index, 0) for positivity.
  std::vector<std::pair<int, int>> witnesses = {};
  /// Largest residual of the sampled transform-side condition, when computed.
  std::optional<double> cross_check = std::nullopt;
};

PropertyReport check_normalized(const CohenKernel& k, bool cross_check = true);
PropertyReport check_time_margins(const CohenKernel& k, bool cross_check = true);
PropertyReport check_frequency_margins(const CohenKernel& k, bool cross_check = true);
PropertyReport check_symmetric(const CohenKernel& k, bool cross_check = true);
PropertyReport check_positive(const CohenKernel& k, bool cross_check = true);
PropertyReport check_unitary(const CohenKernel& k, bool cross_check = true);
PropertyReport check_inner_invariant(const CohenKernel& k);
PropertyReport check_l2_bound(const CohenKernel& k);
PropertyReport check_onb_resolution(const CohenKernel& k);

/// Gram matrix Gamma[x, y] = lag(x^{-1}, y^{-1} x); D[u](e, trivial) is the
/// quadratic form of Gamma in conj(u), up to 1/|G|^2.
Matrix positivity_gram(const CohenKernel& k);

/// Property names in report order.
const std::vector<std::string>& property_names();
/// Runs one checker by name; throws Error for an unknown name.
PropertyReport run_property(const std::string& name, const CohenKernel& k, bool cross_check = true);
std::vector<PropertyReport> run_all_properties(const CohenKernel& k, bool cross_check = true);

/// `PROPERTY <name> HOLDS|FAILS max_violation=<g17> witnesses=<count>`
std::string format_report_line(const PropertyReport& r);
/// Header `name,holds,max_violation,witnesses,cross_check` plus one row per report.
std::string format_report_csv(const std::vector<PropertyReport>& reports);

}  // namespace gtfa
