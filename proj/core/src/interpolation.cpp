#include "pdcouple/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdcouple/errors.hpp"

namespace pdcouple {

namespace {

void check_nodes(std::span<const double> nodes) {
  if (nodes.empty()) throw DegenerateSupportError("empty interpolation support");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j]) throw DegenerateSupportError("repeated interpolation node");
}

std::vector<double> coords(const CoupledGrid& grid, const std::vector<int>& support) {
  std::vector<double> x;
  x.reserve(support.size());
  for (int j : support) x.push_back(grid.local_nodes()[j]);
  return x;
}

std::vector<int> window(int start, int degree) {
  std::vector<int> s(degree + 1);
  for (int i = 0; i <= degree; ++i) s[i] = start + i;
  return s;
}

}  // namespace

std::vector<double> lagrange_value_weights(std::span<const double> nodes, double x, double snap_tol) {
  check_nodes(nodes);
  const std::size_t n = nodes.size();
  std::vector<double> w(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(x - nodes[j]) <= snap_tol) {
      std::fill(w.begin(), w.end(), 0.0);
      w[j] = 1.0;
      return w;
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) w[j] *= (x - nodes[i]) / (nodes[j] - nodes[i]);
  return w;
}

std::vector<double> lagrange_derivative_weights(std::span<const double> nodes, double x) {
  check_nodes(nodes);
  const std::size_t n = nodes.size();
  std::vector<double> w(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      double t = 1.0 / (nodes[j] - nodes[k]);
      for (std::size_t i = 0; i < n; ++i)
        if (i != j && i != k) t *= (x - nodes[i]) / (nodes[j] - nodes[i]);
      w[j] += t;
    }
  }
  return w;
}

std::vector<int> select_support(const CoupledGrid& grid, Side side, int degree, double target) {
  if (degree < 1) throw ConfigurationError("interpolation degree must be >= 1");
  const auto x = grid.local_nodes();
  const int lo = grid.side_begin(side);
  const int hi = grid.side_end(side);
  const double tol = grid.coordinate_tolerance();
  if (hi - lo < degree)
    throw SupportError("local grid side has " + std::to_string(hi - lo + 1) +
                       " nodes, degree " + std::to_string(degree) + " needs " +
                       std::to_string(degree + 1));
  if (target < x[lo] - tol || target > x[hi] + tol)
    throw SupportError("interpolation target " + std::to_string(target) + " lies outside the local grid");

  if (side == Side::kLeft) {
    const int start = hi - degree;
    if (target >= x[start] - tol) return window(start, degree);
    return window(containing_cell(grid, side, target), degree);
  }
  const int start = lo;
  if (target <= x[start + degree] + tol) return window(start, degree);
  return window(containing_cell(grid, side, target) + 1 - degree, degree);
}

InterpolationStencil value_stencil(const CoupledGrid& grid, Side side, int degree, double target) {
  InterpolationStencil s;
  s.kind = StencilKind::kValue;
  s.degree = degree;
  s.support = select_support(grid, side, degree, target);
  s.weights = lagrange_value_weights(coords(grid, s.support), target, grid.coordinate_tolerance());
  return s;
}

InterpolationStencil derivative_stencil(const CoupledGrid& grid, Side side, int degree, double target) {
  InterpolationStencil s;
  s.kind = StencilKind::kDerivative;
  s.degree = degree;
  s.support = select_support(grid, side, degree, target);
  s.weights = lagrange_derivative_weights(coords(grid, s.support), target);
  return s;
}

InterpolationStencil nonlocal_value_stencil(const CoupledGrid& grid, int degree, double target) {
  if (degree < 1) throw ConfigurationError("interpolation degree must be >= 1");
  const auto x = grid.nonlocal_nodes();
  const int last = grid.last_nonlocal();
  if (last < degree) throw SupportError("nonlocal grid too small for the interpolation degree");
  const double tol = grid.coordinate_tolerance();
  if (target < x[0] - tol || target > x[last] + tol)
    throw SupportError("interpolation target lies outside the nonlocal grid");
  int cell = 0;
  while (cell < last - 1 && target >= x[cell + 1] - tol) ++cell;
  // Mirror the window about the middle of the grid so both interfaces lean
  // the same way for even degrees.
  const int lean = 2 * cell < last ? cell - (degree - 1) / 2 : cell + 1 - degree + (degree - 1) / 2;
  const int start = std::clamp(lean, 0, last - degree);

  InterpolationStencil s;
  s.kind = StencilKind::kValue;
  s.degree = degree;
  s.support = window(start, degree);
  std::vector<double> xs;
  for (int k : s.support) xs.push_back(x[k]);
  s.weights = lagrange_value_weights(xs, target, tol);
  return s;
}

}  // namespace pdcouple
