#pragma once

#include <span>
#include <vector>

#include "pdcouple/geometry.hpp"

namespace pdcouple {

enum class StencilKind { kValue, kDerivative };

/// Weights over a set of node indices. For local stencils the indices are
/// local node numbers; for nonlocal stencils they are nonlocal node numbers.
struct InterpolationStencil {
  StencilKind kind = StencilKind::kValue;
  int degree = 0;
  std::vector<int> support;
  std::vector<double> weights;
};

/// Lagrange basis values l_j(x) over `nodes`. When x is within `snap_tol` of
/// a node the exact unit vector is returned.
std::vector<double> lagrange_value_weights(std::span<const double> nodes, double x,
                                           double snap_tol = 0.0);

/// Derivatives l_j'(x) of the Lagrange basis over `nodes`.
std::vector<double> lagrange_derivative_weights(std::span<const double> nodes, double x);

/// p + 1 consecutive local indices on `side` whose hull contains `target`.
///
/// The default window is the p + 1 nodes next to the interface. If the
/// target falls outside it, the window starts at the cell holding the target
/// and extends toward the interface.
std::vector<int> select_support(const CoupledGrid& grid, Side side, int degree, double target);

/// Interpolate the local solution of `side` to `target`.
InterpolationStencil value_stencil(const CoupledGrid& grid, Side side, int degree, double target);

/// Differentiate the local interpolant of `side` at `target`.
InterpolationStencil derivative_stencil(const CoupledGrid& grid, Side side, int degree,
                                        double target);

/// Interpolate the nonlocal solution to `target` with p + 1 consecutive
/// nonlocal nodes. The window is roughly centred on the target and clamped
/// to the grid; it must contain the target.
InterpolationStencil nonlocal_value_stencil(const CoupledGrid& grid, int degree, double target);

}  // namespace pdcouple
