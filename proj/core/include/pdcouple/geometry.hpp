#pragma once

#include <span>
#include <vector>

namespace pdcouple {

/// Bar Omega = (0, length) with the nonlocal subregion (a, b).
struct BarGeometry {
  double length = 3.0;
  double a = 1.0;
  double b = 2.0;

  friend bool operator==(const BarGeometry&, const BarGeometry&) = default;
};

/// Grid-generation parameters.
///
/// h_delta = delta / m is the nonlocal spacing and h_e = ratio * h_delta the
/// local one. epsilon shifts the interface nodes of one grid relative to the
/// other; it must satisfy 0 <= epsilon < h_delta.
struct DiscretizationParams {
  double delta = 0.125;
  int m = 2;
  double ratio = 2.0;
  double epsilon = 0.0;
  double tol_div = 1e-9;

  [[nodiscard]] double h_delta() const { return delta / m; }
  [[nodiscard]] double h_local() const { return ratio * h_delta(); }

  friend bool operator==(const DiscretizationParams&, const DiscretizationParams&) = default;
};

enum class GridLayout {
  kOverlap,          // MDCM / MSCM: nonlocal grid spans (a - delta, b + delta)
  kVariableHorizon,  // VHCM: nonlocal grid spans exactly [a, b]
};

enum class Side { kLeft, kRight };

/// Local and nonlocal node sets with the bookkeeping used by assembly.
///
/// Local nodes are numbered 0..N_e+1: indices 0..n1 cover Omega_1 and
/// n1+1..N_e+1 cover Omega_2. Nonlocal nodes are numbered 0..K, where K is
/// N_delta for the overlap layout and n_delta for the variable-horizon layout.
/// The global unknown vector is ordered
///   [ local 0..n1 | nonlocal 0..K | local n1+1..N_e+1 ].
/// Coincident interface nodes keep separate unknowns.
class CoupledGrid {
 public:
  CoupledGrid(GridLayout layout, BarGeometry geometry, DiscretizationParams params,
              std::vector<double> local_nodes, std::vector<double> nonlocal_nodes, int n1,
              int n2, int n_delta);

  [[nodiscard]] GridLayout layout() const { return layout_; }
  [[nodiscard]] const BarGeometry& geometry() const { return geometry_; }
  [[nodiscard]] const DiscretizationParams& params() const { return params_; }

  [[nodiscard]] std::span<const double> local_nodes() const { return local_nodes_; }
  [[nodiscard]] std::span<const double> nonlocal_nodes() const { return nonlocal_nodes_; }

  [[nodiscard]] int n1() const { return n1_; }
  [[nodiscard]] int n2() const { return n2_; }
  [[nodiscard]] int n_delta() const { return n_delta_; }
  [[nodiscard]] int m() const { return params_.m; }
  /// Index of the last nonlocal node (N_delta or n_delta).
  [[nodiscard]] int last_nonlocal() const { return static_cast<int>(nonlocal_nodes_.size()) - 1; }
  [[nodiscard]] int N_delta() const { return layout_ == GridLayout::kOverlap ? n_delta_ + 2 * m() : n_delta_; }
  [[nodiscard]] int N_e() const { return n1_ + n2_; }
  [[nodiscard]] int N() const { return static_cast<int>(local_nodes_.size() + nonlocal_nodes_.size()); }

  [[nodiscard]] double h_local() const { return params_.h_local(); }
  [[nodiscard]] double h_delta() const { return params_.h_delta(); }

  /// Nonlocal indices of the nodes closest to x = a and x = b
  /// (m and m + n_delta for the overlap layout, 0 and n_delta otherwise).
  [[nodiscard]] int left_interface_nonlocal() const { return layout_ == GridLayout::kOverlap ? m() : 0; }
  [[nodiscard]] int right_interface_nonlocal() const {
    return layout_ == GridLayout::kOverlap ? m() + n_delta_ : n_delta_;
  }

  [[nodiscard]] int local_dof(int j) const;
  [[nodiscard]] int nonlocal_dof(int k) const;

  /// First and last local index of one side.
  [[nodiscard]] int side_begin(Side side) const { return side == Side::kLeft ? 0 : n1_ + 1; }
  [[nodiscard]] int side_end(Side side) const { return side == Side::kLeft ? n1_ : N_e() + 1; }

  /// Absolute tolerance used for coordinate comparisons.
  [[nodiscard]] double coordinate_tolerance() const { return 1e-12 * geometry_.length; }

 private:
  GridLayout layout_;
  BarGeometry geometry_;
  DiscretizationParams params_;
  std::vector<double> local_nodes_;
  std::vector<double> nonlocal_nodes_;
  int n1_;
  int n2_;
  int n_delta_;
};

/// Number of cells of size h in a segment of the given length. Throws
/// ConfigurationError naming `what` when length/h is not an integer within
/// the relative tolerance.
int cell_count(double length, double h, double tol, const char* what);

/// Grids for the overlap methods. With epsilon > 0 the nonlocal grid is
/// placed so that x_m = a + epsilon and x_{m+n_delta} = b - epsilon.
CoupledGrid build_overlap_grid(const BarGeometry& geometry, const DiscretizationParams& params);

/// Grids for the variable-horizon method: nonlocal nodes on [a, b], local
/// grids on [0, a + epsilon] and [b - epsilon, length].
CoupledGrid build_vhcm_grid(const BarGeometry& geometry, const DiscretizationParams& params);

/// Local cell j of `side` with local[j] <= x <= local[j+1]. A coordinate that
/// hits a node resolves to the cell on its right, except the last node of
/// the side, which resolves to the last cell.
int containing_cell(const CoupledGrid& grid, Side side, double x);

}  // namespace pdcouple
