#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "pdcouple/geometry.hpp"
#include "pdcouple/linalg.hpp"
#include "pdcouple/physics.hpp"

namespace pdcouple {

enum class Method { kMdcm, kMscm, kVhcm, kFdm };

/// How the bond stiffness is taken when the modulus varies.
enum class KappaRule {
  kBondAverage,  // mean of the micromodulus at both bond ends
  kNeighbor,     // micromodulus at the neighbor node only
};

enum class RowKind {
  kDirichlet,
  kLocal,
  kPeridynamic,
  kValueMatch,         // interpolated local value equals a nonlocal unknown
  kReverseValueMatch,  // interpolated nonlocal value equals a local unknown
  kStressMatch,
  kNeumann,
};

enum class GridKind { kLocal, kNonlocal };

/// Coefficients on consecutive node indices first, first+1, ... of one grid.
struct StencilRow {
  int first = 0;
  std::vector<double> coeffs;
  double rhs = 0.0;
};

struct DofInfo {
  GridKind grid = GridKind::kLocal;
  int index = 0;
  double x = 0.0;
};

struct AssembledSystem {
  Method method = Method::kMdcm;
  DenseMatrix matrix;
  Vector rhs;
  std::vector<RowKind> row_kinds;
  std::vector<DofInfo> dofs;
};

struct AssemblyOptions {
  Method method = Method::kMdcm;
  int degree = 3;
  BoundaryCondition bc = BoundaryCondition::kMixed;
  KappaRule kappa_rule = KappaRule::kBondAverage;
};

/// Flux-form second difference -(E u')' = f at interior node j.
StencilRow local_row(std::span<const double> nodes, int j, const ElasticModulusProfile& modulus,
                     double forcing);

/// Trapezoid-rule peridynamic row at node k with a horizon of `radius` cells
/// of size h. Returns coefficients on k - radius .. k + radius.
StencilRow pd_row(std::span<const double> nodes, int k, int radius, double h,
                  const ElasticModulusProfile& modulus, KappaRule rule, double forcing);

/// Peridynamic row whose horizon shrinks to the distance to the nearest end
/// of the nonlocal grid, capped at m cells.
StencilRow pd_row_variable_horizon(std::span<const double> nodes, int k, int m, double h,
                                   const ElasticModulusProfile& modulus, KappaRule rule,
                                   double forcing);

/// One-sided third-order stress E u' at nonlocal node k. Side::kLeft uses
/// k .. k+3 (forward), Side::kRight uses k-3 .. k (backward).
StencilRow stress_row(int k, Side side, double modulus, double h);

/// Traction row E u'(length) = g on the last four local nodes.
StencilRow neumann_row(int last, double modulus, double h, double traction);

/// Global system of a coupled method. The method must match the grid layout.
AssembledSystem assemble(const CoupledGrid& grid, const ElasticModulusProfile& modulus,
                         const ManufacturedCase& problem, const AssemblyOptions& options);

/// Classical second-order finite differences on a uniform grid of size h.
AssembledSystem assemble_fdm(double length, double h, const ElasticModulusProfile& modulus,
                             const ManufacturedCase& problem, BoundaryCondition bc,
                             double tol_div = 1e-9);

std::string_view to_string(Method method);
Method parse_method(std::string_view name);
std::string_view to_string(KappaRule rule);
KappaRule parse_kappa_rule(std::string_view name);
std::string_view to_string(BoundaryCondition bc);
BoundaryCondition parse_bc(std::string_view name);
std::string_view to_string(RowKind kind);

}  // namespace pdcouple
