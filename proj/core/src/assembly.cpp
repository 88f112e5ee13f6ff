#include "pdcouple/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdcouple/errors.hpp"
#include "pdcouple/interpolation.hpp"

namespace pdcouple {

namespace {

constexpr double kForward[4] = {-11.0, 18.0, -9.0, 2.0};
constexpr double kBackward[4] = {-2.0, 9.0, -18.0, 11.0};

class RowWriter {
 public:
  explicit RowWriter(int n) : matrix_(DenseMatrix::Zero(n, n)), rhs_(Vector::Zero(n)), n_(n) {}

  // Begin a row; entries are accumulated until the next call.
  void begin(RowKind kind, double rhs) {
    if (row_ + 1 >= n_) throw AssemblyError("more rows than unknowns");
    ++row_;
    kinds_.push_back(kind);
    rhs_(row_) = rhs;
  }
  void add(int col, double value) { matrix_(row_, col) += value; }

  AssembledSystem finish(Method method, std::vector<DofInfo> dofs) {
    if (row_ + 1 != n_)
      throw AssemblyError("assembled " + std::to_string(row_ + 1) + " rows for " + std::to_string(n_) +
                          " unknowns");
    AssembledSystem s;
    s.method = method;
    s.matrix = std::move(matrix_);
    s.rhs = std::move(rhs_);
    s.row_kinds = std::move(kinds_);
    s.dofs = std::move(dofs);
    return s;
  }

 private:
  DenseMatrix matrix_;
  Vector rhs_;
  std::vector<RowKind> kinds_;
  int n_;
  int row_ = -1;
};

double bond_modulus(const ElasticModulusProfile& modulus, KappaRule rule, double xk, double xi) {
  return rule == KappaRule::kNeighbor ? modulus(xi) : 0.5 * (modulus(xk) + modulus(xi));
}

}  // namespace

StencilRow local_row(std::span<const double> nodes, int j, const ElasticModulusProfile& modulus,
                     double forcing) {
  if (j < 1 || j + 1 >= static_cast<int>(nodes.size()))
    throw StencilRangeError("local row needs both neighbors of node " + std::to_string(j));
  const double hl = nodes[j] - nodes[j - 1];
  const double hr = nodes[j + 1] - nodes[j];
  const double el = modulus(nodes[j] - 0.5 * hl);
  const double er = modulus(nodes[j] + 0.5 * hr);
  const double scale = 2.0 / (hl + hr);
  StencilRow r;
  r.first = j - 1;
  r.coeffs = {-scale * el / hl, scale * (el / hl + er / hr), -scale * er / hr};
  r.rhs = forcing;
  return r;
}

StencilRow pd_row(std::span<const double> nodes, int k, int radius, double h,
                  const ElasticModulusProfile& modulus, KappaRule rule, double forcing) {
  if (radius < 1) throw StencilRangeError("peridynamic row needs a horizon of at least one cell");
  if (k - radius < 0 || k + radius >= static_cast<int>(nodes.size()))
    throw StencilRangeError("peridynamic row at node " + std::to_string(k) + " reaches outside the grid");
  const double horizon = radius * h;
  StencilRow r;
  r.first = k - radius;
  r.coeffs.assign(2 * radius + 1, 0.0);
  r.rhs = forcing;
  for (int i = -radius; i <= radius; ++i) {
    if (i == 0) continue;
    const double weight = std::abs(i) == radius ? 0.5 * h : h;
    const double e = bond_modulus(modulus, rule, nodes[k], nodes[k + i]);
    const double c = kappa(e, horizon) * weight / (std::abs(i) * h);
    r.coeffs[radius + i] -= c;
    r.coeffs[radius] += c;
  }
  return r;
}

StencilRow pd_row_variable_horizon(std::span<const double> nodes, int k, int m, double h,
                                   const ElasticModulusProfile& modulus, KappaRule rule,
                                   double forcing) {
  const int last = static_cast<int>(nodes.size()) - 1;
  const int radius = std::min({k, m, last - k});
  if (radius < 1) throw StencilRangeError("variable-horizon row requested at a grid end");
  return pd_row(nodes, k, radius, h, modulus, rule, forcing);
}

StencilRow stress_row(int k, Side side, double modulus, double h) {
  StencilRow r;
  const double* w = side == Side::kLeft ? kForward : kBackward;
  r.first = side == Side::kLeft ? k : k - 3;
  if (r.first < 0) throw StencilRangeError("backward stress stencil needs three nodes behind it");
  r.coeffs.resize(4);
  for (int i = 0; i < 4; ++i) r.coeffs[i] = modulus * w[i] / (6.0 * h);
  return r;
}

StencilRow neumann_row(int last, double modulus, double h, double traction) {
  StencilRow r = stress_row(last, Side::kRight, modulus, h);
  r.rhs = traction;
  return r;
}

AssembledSystem assemble(const CoupledGrid& grid, const ElasticModulusProfile& modulus,
                         const ManufacturedCase& problem, const AssemblyOptions& options) {
  const bool overlap = grid.layout() == GridLayout::kOverlap;
  if (options.method == Method::kFdm) throw ConfigurationError("use assemble_fdm for the FDM model");
  if ((options.method == Method::kVhcm) == overlap)
    throw ConfigurationError("method does not match the grid layout");
  const int p = options.degree;
  if (p < 1) throw ConfigurationError("interpolation degree must be >= 1");

  const auto lx = grid.local_nodes();
  const auto px = grid.nonlocal_nodes();
  const int n1 = grid.n1();
  const int Ne = grid.N_e();
  const int K = grid.last_nonlocal();
  const int m = grid.m();
  const int nd = grid.n_delta();
  const double he = grid.h_local();
  const double hd = grid.h_delta();
  const double eps = grid.params().epsilon;
  if (grid.n2() < 3 && options.bc == BoundaryCondition::kMixed)
    throw SupportError("traction row needs at least four nodes on the right local grid");

  RowWriter w(grid.N());
  auto L = [&](int j) { return grid.local_dof(j); };
  auto P = [&](int k) { return grid.nonlocal_dof(k); };
  auto put_local = [&](const StencilRow& r) {
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) w.add(L(r.first + static_cast<int>(i)), r.coeffs[i]);
  };
  auto put_nonlocal = [&](const StencilRow& r, double sign) {
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
      w.add(P(r.first + static_cast<int>(i)), sign * r.coeffs[i]);
  };

  auto local_rows = [&](int from, int to) {
    for (int j = from; j <= to; ++j) {
      const StencilRow r = local_row(lx, j, modulus, problem.forcing(lx[j]));
      w.begin(RowKind::kLocal, r.rhs);
      put_local(r);
    }
  };
  auto value_row = [&](int k, Side side) {
    const InterpolationStencil s = value_stencil(grid, side, p, px[k]);
    w.begin(RowKind::kValueMatch, 0.0);
    for (std::size_t i = 0; i < s.support.size(); ++i) w.add(L(s.support[i]), s.weights[i]);
    w.add(P(k), -1.0);
  };
  auto reverse_value_row = [&](int j) {
    const InterpolationStencil s = nonlocal_value_stencil(grid, p, lx[j]);
    w.begin(RowKind::kReverseValueMatch, 0.0);
    w.add(L(j), 1.0);
    for (std::size_t i = 0; i < s.support.size(); ++i) w.add(P(s.support[i]), -s.weights[i]);
  };
  // Interface value coupling: with matching nodes the local interpolant is
  // sampled at the nonlocal node; with shifted nodes the interface node of
  // the local grid lies outside the local hull, so the nonlocal field is
  // interpolated there instead.
  auto interface_row = [&](int k, Side side) {
    if (overlap && eps > 0.0)
      reverse_value_row(side == Side::kLeft ? n1 : n1 + 1);
    else
      value_row(k, side);
  };
  auto stress_match = [&](int k, Side side) {
    const double e = modulus(px[k]);
    const InterpolationStencil s = derivative_stencil(grid, side, p, px[k]);
    w.begin(RowKind::kStressMatch, 0.0);
    for (std::size_t i = 0; i < s.support.size(); ++i) w.add(L(s.support[i]), e * s.weights[i]);
    put_nonlocal(stress_row(k, side, e, hd), -1.0);
  };
  auto pd_rows = [&](int from, int to) {
    for (int k = from; k <= to; ++k) {
      const double f = problem.forcing(px[k]);
      const StencilRow r = overlap ? pd_row(px, k, m, hd, modulus, options.kappa_rule, f)
                                   : pd_row_variable_horizon(px, k, m, hd, modulus, options.kappa_rule, f);
      w.begin(RowKind::kPeridynamic, r.rhs);
      put_nonlocal(r, 1.0);
    }
  };

  w.begin(RowKind::kDirichlet, problem.u(lx[0]));
  w.add(L(0), 1.0);
  local_rows(1, n1 - 1);

  switch (options.method) {
    case Method::kMdcm:
      for (int k = 0; k < m; ++k) value_row(k, Side::kLeft);
      interface_row(m, Side::kLeft);
      pd_rows(m, m + nd);
      interface_row(m + nd, Side::kRight);
      for (int k = m + nd + 1; k <= K; ++k) value_row(k, Side::kRight);
      break;
    case Method::kMscm:
      for (int k = 0; k < m; ++k) stress_match(k, Side::kLeft);
      interface_row(m, Side::kLeft);
      pd_rows(m, m + nd);
      interface_row(m + nd, Side::kRight);
      for (int k = m + nd + 1; k <= K; ++k) stress_match(k, Side::kRight);
      break;
    case Method::kVhcm:
      value_row(0, Side::kLeft);
      stress_match(0, Side::kLeft);
      pd_rows(1, nd - 1);
      stress_match(nd, Side::kRight);
      value_row(nd, Side::kRight);
      break;
    case Method::kFdm:
      break;
  }

  local_rows(n1 + 2, Ne);
  if (options.bc == BoundaryCondition::kMixed) {
    const StencilRow r = neumann_row(Ne + 1, modulus(lx[Ne + 1]), he, problem.traction());
    w.begin(RowKind::kNeumann, r.rhs);
    put_local(r);
  } else {
    w.begin(RowKind::kDirichlet, problem.u(lx[Ne + 1]));
    w.add(L(Ne + 1), 1.0);
  }

  std::vector<DofInfo> dofs(grid.N());
  for (int j = 0; j <= Ne + 1; ++j) dofs[L(j)] = {GridKind::kLocal, j, lx[j]};
  for (int k = 0; k <= K; ++k) dofs[P(k)] = {GridKind::kNonlocal, k, px[k]};
  return w.finish(options.method, std::move(dofs));
}

AssembledSystem assemble_fdm(double length, double h, const ElasticModulusProfile& modulus,
                             const ManufacturedCase& problem, BoundaryCondition bc, double tol_div) {
  if (!(h > 0.0)) throw ConfigurationError("grid spacing must be positive");
  const int n = cell_count(length, h, tol_div, "length/h");
  if (n < 3) throw ConfigurationError("FDM grid needs at least three cells");
  std::vector<double> x(n + 1);
  for (int i = 0; i <= n; ++i) x[i] = i * h;
  x[n] = length;

  RowWriter w(n + 1);
  w.begin(RowKind::kDirichlet, problem.u(x[0]));
  w.add(0, 1.0);
  for (int j = 1; j < n; ++j) {
    const StencilRow r = local_row(x, j, modulus, problem.forcing(x[j]));
    w.begin(RowKind::kLocal, r.rhs);
    for (int i = 0; i < 3; ++i) w.add(r.first + i, r.coeffs[i]);
  }
  if (bc == BoundaryCondition::kMixed) {
    const StencilRow r = neumann_row(n, modulus(length), h, problem.traction());
    w.begin(RowKind::kNeumann, r.rhs);
    for (int i = 0; i < 4; ++i) w.add(r.first + i, r.coeffs[i]);
  } else {
    w.begin(RowKind::kDirichlet, problem.u(length));
    w.add(n, 1.0);
  }
  std::vector<DofInfo> dofs(n + 1);
  for (int i = 0; i <= n; ++i) dofs[i] = {GridKind::kLocal, i, x[i]};
  return w.finish(Method::kFdm, std::move(dofs));
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kMdcm: return "mdcm";
    case Method::kMscm: return "mscm";
    case Method::kVhcm: return "vhcm";
    case Method::kFdm: return "fdm";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "mdcm") return Method::kMdcm;
  if (name == "mscm") return Method::kMscm;
  if (name == "vhcm") return Method::kVhcm;
  if (name == "fdm") return Method::kFdm;
  throw ConfigurationError("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(KappaRule rule) {
  return rule == KappaRule::kNeighbor ? "neighbor" : "bond-average";
}

KappaRule parse_kappa_rule(std::string_view name) {
  if (name == "bond-average") return KappaRule::kBondAverage;
  if (name == "neighbor") return KappaRule::kNeighbor;
  throw ConfigurationError("unknown kappa rule '" + std::string(name) + "'");
}

std::string_view to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::kMixed ? "mixed" : "dirichlet";
}

BoundaryCondition parse_bc(std::string_view name) {
  if (name == "mixed" || name == "neumann") return BoundaryCondition::kMixed;
  if (name == "dirichlet") return BoundaryCondition::kDirichletBoth;
  throw ConfigurationError("unknown boundary condition '" + std::string(name) + "'");
}

std::string_view to_string(RowKind kind) {
  switch (kind) {
    case RowKind::kDirichlet: return "dirichlet";
    case RowKind::kLocal: return "local";
    case RowKind::kPeridynamic: return "peridynamic";
    case RowKind::kValueMatch: return "value";
    case RowKind::kReverseValueMatch: return "reverse-value";
    case RowKind::kStressMatch: return "stress";
    case RowKind::kNeumann: return "neumann";
  }
  return "?";
}

}  // namespace pdcouple
