#include "pdcouple/geometry.hpp"

#include <cmath>
#include <string>

#include "pdcouple/errors.hpp"

namespace pdcouple {

namespace {

void check_params(const BarGeometry& g, const DiscretizationParams& p) {
  if (!(g.length > 0.0) || !(g.a > 0.0) || !(g.a < g.b) || !(g.b < g.length))
    throw GeometryError("bar geometry must satisfy 0 < a < b < length");
  if (p.m < 1) throw ConfigurationError("m must be a positive integer");
  if (!(p.delta > 0.0) || !std::isfinite(p.delta)) throw ConfigurationError("delta must be positive");
  if (!(p.ratio >= 1.0) || !std::isfinite(p.ratio))
    throw ConfigurationError("grid ratio h_e/h_delta must be >= 1");
  if (!(p.epsilon >= 0.0) || !(p.epsilon < p.h_delta()))
    throw ConfigurationError("epsilon must satisfy 0 <= epsilon < h_delta");
}

std::vector<double> local_side_nodes(double lo, double hi, int cells, double h, bool anchor_hi) {
  // Nodes come from index formulas anchored at the end that carries the
  // interface, so that endpoint is reproduced exactly.
  std::vector<double> x(cells + 1);
  for (int j = 0; j <= cells; ++j)
    x[j] = anchor_hi ? hi - (cells - j) * h : lo + j * h;
  x.front() = lo;
  x.back() = hi;
  return x;
}

}  // namespace

int cell_count(double length, double h, double tol, const char* what) {
  const double q = length / h;
  const double r = std::round(q);
  if (r < 1.0 || std::abs(q - r) > tol * std::max(1.0, std::abs(q)))
    throw ConfigurationError(std::string(what) + " = " + std::to_string(q) +
                             " is not a positive integer");
  return static_cast<int>(r);
}

CoupledGrid::CoupledGrid(GridLayout layout, BarGeometry geometry, DiscretizationParams params,
                         std::vector<double> local_nodes, std::vector<double> nonlocal_nodes,
                         int n1, int n2, int n_delta)
    : layout_(layout),
      geometry_(geometry),
      params_(params),
      local_nodes_(std::move(local_nodes)),
      nonlocal_nodes_(std::move(nonlocal_nodes)),
      n1_(n1),
      n2_(n2),
      n_delta_(n_delta) {
  if (static_cast<int>(local_nodes_.size()) != n1_ + n2_ + 2)
    throw GeometryError("local node count does not match n1 + n2 + 2");
  const int expected = layout_ == GridLayout::kOverlap ? n_delta_ + 2 * params_.m + 1 : n_delta_ + 1;
  if (static_cast<int>(nonlocal_nodes_.size()) != expected)
    throw GeometryError("nonlocal node count does not match the layout");
}

int CoupledGrid::local_dof(int j) const {
  if (j < 0 || j > N_e() + 1) throw RangeError("local index out of range: " + std::to_string(j));
  return j <= n1_ ? j : j + last_nonlocal() + 1;
}

int CoupledGrid::nonlocal_dof(int k) const {
  if (k < 0 || k > last_nonlocal()) throw RangeError("nonlocal index out of range: " + std::to_string(k));
  return n1_ + 1 + k;
}

CoupledGrid build_overlap_grid(const BarGeometry& g, const DiscretizationParams& p) {
  check_params(g, p);
  if (!(g.a - p.delta > 0.0) || !(g.b + p.delta < g.length))
    throw GeometryError("overlap regions (a - delta, a) and (b, b + delta) must lie inside the bar");
  const double hd = p.h_delta();
  const double he = p.h_local();
  const int n_delta = cell_count(g.b - g.a - 2.0 * p.epsilon, hd, p.tol_div, "(b - a - 2*epsilon)/h_delta");
  const int n1 = cell_count(g.a, he, p.tol_div, "a/h_e");
  const int n2 = cell_count(g.length - g.b, he, p.tol_div, "(length - b)/h_e");

  const int m = p.m;
  const int K = n_delta + 2 * m;
  const double left = g.a + p.epsilon;
  const double right = g.b - p.epsilon;
  std::vector<double> x(K + 1);
  for (int k = 0; k <= K; ++k)
    x[k] = 2 * k <= K ? left + (k - m) * hd : right - (m + n_delta - k) * hd;

  std::vector<double> local = local_side_nodes(0.0, g.a, n1, he, true);
  std::vector<double> right_side = local_side_nodes(g.b, g.length, n2, he, false);
  local.insert(local.end(), right_side.begin(), right_side.end());
  return CoupledGrid(GridLayout::kOverlap, g, p, std::move(local), std::move(x), n1, n2, n_delta);
}

CoupledGrid build_vhcm_grid(const BarGeometry& g, const DiscretizationParams& p) {
  check_params(g, p);
  if (!(g.b - p.epsilon < g.length)) throw GeometryError("shifted interface leaves the bar");
  const double hd = p.h_delta();
  const double he = p.h_local();
  const int n_delta = cell_count(g.b - g.a, hd, p.tol_div, "(b - a)/h_delta");
  const int n1 = cell_count(g.a + p.epsilon, he, p.tol_div, "(a + epsilon)/h_e");
  const int n2 = cell_count(g.length - g.b + p.epsilon, he, p.tol_div, "(length - b + epsilon)/h_e");

  std::vector<double> x(n_delta + 1);
  for (int k = 0; k <= n_delta; ++k) x[k] = 2 * k <= n_delta ? g.a + k * hd : g.b - (n_delta - k) * hd;

  std::vector<double> local = local_side_nodes(0.0, g.a + p.epsilon, n1, he, true);
  std::vector<double> right_side = local_side_nodes(g.b - p.epsilon, g.length, n2, he, false);
  local.insert(local.end(), right_side.begin(), right_side.end());
  return CoupledGrid(GridLayout::kVariableHorizon, g, p, std::move(local), std::move(x), n1, n2, n_delta);
}

int containing_cell(const CoupledGrid& grid, Side side, double x) {
  const auto nodes = grid.local_nodes();
  const int lo = grid.side_begin(side);
  const int hi = grid.side_end(side);
  const double tol = grid.coordinate_tolerance();
  if (x < nodes[lo] - tol || x > nodes[hi] + tol)
    throw RangeError("coordinate " + std::to_string(x) + " lies outside the local grid side");
  for (int j = lo; j < hi; ++j)
    if (x < nodes[j + 1] - tol) return j;
  return hi - 1;
}

}  // namespace pdcouple
