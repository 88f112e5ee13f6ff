#include "pdcouple/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "pdcouple/errors.hpp"
#include "pdcouple/fraction.hpp"

namespace pdcouple {

namespace {

struct ReferenceSolution {
  double h = 0.0;
  Vector u;
};

ReferenceSolution fdm_reference(const CaseConfig& config, double h, const ElasticModulusProfile& modulus,
                                const ManufacturedCase& problem) {
  const AssembledSystem sys =
      assemble_fdm(config.geometry.length, h, modulus, problem, config.effective_bc(), config.grid.tol_div);
  return {h, solve(sys.matrix, sys.rhs).x};
}

double reference_spacing(const CaseConfig& config) {
  switch (config.reference.kind) {
    case ReferenceKind::kFdmLocal: return config.grid.h_local();
    case ReferenceKind::kFdmNonlocal: return config.grid.h_delta();
    case ReferenceKind::kFdmSpacing: return config.reference.h;
    case ReferenceKind::kExact: break;
  }
  return 0.0;
}

}  // namespace

ReferenceSpec parse_reference(std::string_view text) {
  if (text == "exact") return {ReferenceKind::kExact, 0.0};
  if (text == "fdm") return {ReferenceKind::kFdmLocal, 0.0};
  if (text == "fdm-hd") return {ReferenceKind::kFdmNonlocal, 0.0};
  if (text.substr(0, 4) == "fdm:") {
    const double h = parse_number(text.substr(4));
    if (!(h > 0.0)) throw ConfigurationError("reference spacing must be positive");
    return {ReferenceKind::kFdmSpacing, h};
  }
  throw ConfigurationError("unknown reference '" + std::string(text) + "'");
}

std::string to_string(const ReferenceSpec& ref) {
  switch (ref.kind) {
    case ReferenceKind::kExact: return "exact";
    case ReferenceKind::kFdmLocal: return "fdm";
    case ReferenceKind::kFdmNonlocal: return "fdm-hd";
    case ReferenceKind::kFdmSpacing: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "fdm:%.17g", ref.h);
      return buf;
    }
  }
  return "?";
}

BoundaryCondition CaseConfig::effective_bc() const {
  if (bc) return *bc;
  return manufactured_case(case_name, geometry.length).default_bc;
}

ElasticModulusProfile CaseConfig::profile() const {
  return profile_c ? ElasticModulusProfile::spline(*profile_c) : ElasticModulusProfile::constant(1.0);
}

AssembledSystem build_system(const CaseConfig& config) {
  const ManufacturedCase problem = manufactured_case(config.case_name, config.geometry.length);
  const ElasticModulusProfile modulus = config.profile();
  if (config.method == Method::kFdm)
    return assemble_fdm(config.geometry.length, config.grid.h_local(), modulus, problem, config.effective_bc(),
                        config.grid.tol_div);
  const CoupledGrid grid = config.method == Method::kVhcm ? build_vhcm_grid(config.geometry, config.grid)
                                                          : build_overlap_grid(config.geometry, config.grid);
  AssemblyOptions options;
  options.method = config.method;
  options.degree = config.degree;
  options.bc = config.effective_bc();
  options.kappa_rule = config.kappa_rule;
  return assemble(grid, modulus, problem, options);
}

CaseReport run_case(const CaseConfig& config) {
  const ManufacturedCase problem = manufactured_case(config.case_name, config.geometry.length);
  const ElasticModulusProfile modulus = config.profile();
  const AssembledSystem sys = build_system(config);
  const LinearSolution sol = solve(sys.matrix, sys.rhs);

  std::optional<ReferenceSolution> fdm;
  if (config.reference.kind != ReferenceKind::kExact)
    fdm = fdm_reference(config, reference_spacing(config), modulus, problem);

  CaseReport report;
  report.config = config;
  for (std::size_t d = 0; d < sys.dofs.size(); ++d) {
    const DofInfo& info = sys.dofs[d];
    NodeRecord r;
    r.grid = info.grid;
    r.index = info.index;
    r.x = info.x;
    r.u = sol.x(static_cast<Eigen::Index>(d));
    if (fdm) {
      const double q = info.x / fdm->h;
      const double i = std::round(q);
      if (std::abs(q - i) > 1e-9 * std::max(1.0, q) || i < 0 || i >= static_cast<double>(fdm->u.size()))
        continue;
      r.ref = fdm->u(static_cast<Eigen::Index>(i));
    } else {
      r.ref = problem.u(info.x);
    }
    r.abs_err = std::abs(r.u - r.ref);
    report.records.push_back(r);
  }
  if (report.records.empty())
    throw ConfigurationError("no node of the solution coincides with the reference grid");
  std::stable_sort(report.records.begin(), report.records.end(), [](const NodeRecord& a, const NodeRecord& b) {
    if (a.grid != b.grid) return a.grid == GridKind::kLocal;
    return a.index < b.index;
  });

  report.summary.N = static_cast<int>(sys.dofs.size());
  for (const NodeRecord& r : report.records) report.summary.max_abs_err = std::max(report.summary.max_abs_err, r.abs_err);
  report.summary.residual = sol.relative_residual;
  if (config.compute_condition) report.summary.cond = condition_number_2(sys.matrix);
  return report;
}

SweepAxis parse_sweep_axis(std::string_view text) {
  if (text == "delta") return SweepAxis::kDelta;
  if (text == "n") return SweepAxis::kN;
  if (text == "c") return SweepAxis::kC;
  if (text == "p" || text == "degree") return SweepAxis::kDegree;
  throw ConfigurationError("unknown sweep axis '" + std::string(text) + "'");
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kDelta: return "delta";
    case SweepAxis::kN: return "n";
    case SweepAxis::kC: return "c";
    case SweepAxis::kDegree: return "p";
  }
  return "?";
}

CaseConfig with_axis_value(CaseConfig config, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::kDelta:
      config.grid.delta = value;
      break;
    case SweepAxis::kN: {
      if (!(value >= 1.0) || value != std::floor(value)) throw ConfigurationError("n must be a positive integer");
      // h_e = 1/n, h_delta = h_e / ratio, delta = m h_delta
      config.grid.delta = config.grid.m / (config.grid.ratio * value);
      break;
    }
    case SweepAxis::kC:
      config.profile_c = value;
      break;
    case SweepAxis::kDegree:
      if (value != std::floor(value)) throw ConfigurationError("degree must be an integer");
      config.degree = static_cast<int>(value);
      break;
  }
  return config;
}

SweepResult run_sweep(const CaseConfig& base, SweepAxis axis, std::span<const double> values) {
  SweepResult out;
  out.axis = axis;
  for (double v : values) {
    try {
      out.reports.push_back(run_case(with_axis_value(base, axis, v)));
      out.values.push_back(v);
    } catch (const ConfigurationError& e) {
      out.failures.push_back({v, e.what(), false});
    } catch (const NumericalError& e) {
      out.failures.push_back({v, e.what(), true});
    }
  }
  for (std::size_t i = 0; i + 1 < out.reports.size(); ++i)
    out.reduction_factors.push_back(out.reports[i].summary.max_abs_err / out.reports[i + 1].summary.max_abs_err);
  return out;
}

std::vector<double> default_table_labels() { return {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64}; }

std::vector<TableEntry> run_table1(std::span<const double> labels) {
  std::vector<TableEntry> out;
  for (double label : labels) {
    CaseConfig c;
    c.case_name = "quartic";
    c.bc = BoundaryCondition::kMixed;
    c.grid.m = 2;
    c.grid.ratio = 2.0;
    c.grid.delta = label / 2.0;
    c.reference = {ReferenceKind::kFdmLocal, 0.0};
    const struct {
      const char* column;
      Method method;
      int degree;
    } columns[] = {{"vhcm", Method::kVhcm, 3}, {"mdcm-i2", Method::kMdcm, 2}, {"mdcm-i3", Method::kMdcm, 3}};
    for (const auto& col : columns) {
      c.method = col.method;
      c.degree = col.degree;
      out.push_back({col.column, label, 1.0, run_case(c)});
    }
  }
  return out;
}

std::vector<TableEntry> run_table2(std::span<const double> c_values, std::span<const double> labels,
                                   std::span<const std::string> cases, KappaRule rule) {
  std::vector<TableEntry> out;
  for (double cv : c_values) {
    for (double label : labels) {
      for (const std::string& name : cases) {
        CaseConfig c;
        c.method = Method::kMdcm;
        c.degree = 3;
        c.case_name = name;
        c.bc = BoundaryCondition::kMixed;
        c.profile_c = cv;
        c.kappa_rule = rule;
        c.grid.m = 2;
        c.grid.ratio = 1.0;
        c.grid.delta = label;
        c.reference = {ReferenceKind::kFdmNonlocal, 0.0};
        out.push_back({name, label, cv, run_case(c)});
      }
    }
  }
  return out;
}

}  // namespace pdcouple
