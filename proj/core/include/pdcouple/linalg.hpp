#pragma once

#include <Eigen/Dense>

namespace pdcouple {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct LinearSolution {
  Vector x;
  /// ||M x - r||_inf / (||M||_inf ||x||_inf + ||r||_inf)
  double relative_residual = 0.0;
};

/// Dense LU with partial pivoting. Throws SingularSystemError when a pivot
/// falls below 1e-14 * ||M||_inf or the result is not finite.
LinearSolution solve(const DenseMatrix& matrix, const Vector& rhs);

/// Spectral condition number from the singular values. Returns +inf for a
/// numerically singular matrix.
double condition_number_2(const DenseMatrix& matrix);

double inf_norm(const DenseMatrix& matrix);

}  // namespace pdcouple
