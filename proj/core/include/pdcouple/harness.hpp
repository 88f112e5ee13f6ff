#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdcouple/assembly.hpp"
#include "pdcouple/geometry.hpp"

namespace pdcouple {

enum class ReferenceKind {
  kExact,        // manufactured solution
  kFdmLocal,     // FDM with the local spacing h_e
  kFdmNonlocal,  // FDM with the nonlocal spacing h_delta
  kFdmSpacing,   // FDM with an explicit spacing
};

struct ReferenceSpec {
  ReferenceKind kind = ReferenceKind::kExact;
  double h = 0.0;  // only for kFdmSpacing

  friend bool operator==(const ReferenceSpec&, const ReferenceSpec&) = default;
};

/// exact | fdm | fdm-hd | fdm:<h>
ReferenceSpec parse_reference(std::string_view text);
std::string to_string(const ReferenceSpec& ref);

struct CaseConfig {
  Method method = Method::kMdcm;
  BarGeometry geometry;
  DiscretizationParams grid;
  int degree = 3;
  std::optional<BoundaryCondition> bc;  // unset: the case's own condition
  std::optional<double> profile_c;      // unset: E = 1
  std::string case_name = "quartic";
  ReferenceSpec reference;
  KappaRule kappa_rule = KappaRule::kBondAverage;
  bool compute_condition = false;

  [[nodiscard]] BoundaryCondition effective_bc() const;
  [[nodiscard]] ElasticModulusProfile profile() const;

  friend bool operator==(const CaseConfig&, const CaseConfig&) = default;
};

struct NodeRecord {
  GridKind grid = GridKind::kLocal;
  int index = 0;
  double x = 0.0;
  double u = 0.0;
  double ref = 0.0;
  double abs_err = 0.0;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

struct CaseSummary {
  int N = 0;
  double max_abs_err = 0.0;
  double cond = std::numeric_limits<double>::quiet_NaN();  // NaN when not requested
  double residual = 0.0;
};

struct CaseReport {
  CaseConfig config;
  std::vector<NodeRecord> records;  // local nodes by index, then nonlocal nodes by index
  CaseSummary summary;
};

/// Build, assemble, solve and compare one configuration. Only nodes that
/// have a reference value (every node for the exact reference, nodes that
/// coincide with an FDM node otherwise) are recorded.
CaseReport run_case(const CaseConfig& config);

/// Assembled system of a configuration without solving it.
AssembledSystem build_system(const CaseConfig& config);

enum class SweepAxis {
  kDelta,   // horizon
  kN,       // local cells per unit length: h_e = 1/n
  kC,       // modulus profile parameter
  kDegree,  // interpolation degree
};

SweepAxis parse_sweep_axis(std::string_view text);
std::string_view to_string(SweepAxis axis);

/// Apply one sweep value to a configuration.
CaseConfig with_axis_value(CaseConfig config, SweepAxis axis, double value);

struct SweepFailure {
  double value = 0.0;
  std::string message;
  bool numerical = false;  // NumericalError rather than ConfigurationError
};

struct SweepResult {
  SweepAxis axis = SweepAxis::kDelta;
  std::vector<double> values;       // values that ran, in input order
  std::vector<CaseReport> reports;  // same order as values
  /// reports[i].max_abs_err / reports[i+1].max_abs_err
  std::vector<double> reduction_factors;
  std::vector<SweepFailure> failures;
};

/// Run one case per axis value. A failing case is recorded and skipped.
SweepResult run_sweep(const CaseConfig& base, SweepAxis axis, std::span<const double> values);

/// One entry of a published-table style experiment.
struct TableEntry {
  std::string column;   // e.g. "vhcm", "mdcm-i2", or a case name
  double label = 0.0;   // row label (delta as the table lists it)
  double c = 1.0;       // profile parameter, 1 for constant E
  CaseReport report;
};

/// Quartic case, m = 2, ratio 2, FDM(h_e) reference. The label delta is the
/// local spacing scale: h_e = label / 2, so the horizon equals label / 2.
std::vector<TableEntry> run_table1(std::span<const double> labels);

/// MDCM with cubic interpolation, spline modulus, ratio 1, FDM(h_delta)
/// reference, horizon = label.
std::vector<TableEntry> run_table2(std::span<const double> c_values, std::span<const double> labels,
                                   std::span<const std::string> cases,
                                   KappaRule rule = KappaRule::kBondAverage);

std::vector<double> default_table_labels();

}  // namespace pdcouple
