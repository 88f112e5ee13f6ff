#include "pdcouple/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pdcouple/errors.hpp"

namespace pdcouple {

double inf_norm(const DenseMatrix& matrix) {
  if (matrix.size() == 0) return 0.0;
  return matrix.cwiseAbs().rowwise().sum().maxCoeff();
}

LinearSolution solve(const DenseMatrix& matrix, const Vector& rhs) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != rhs.size())
    throw ConfigurationError("solve: dimension mismatch");
  if (!matrix.allFinite() || !rhs.allFinite()) throw SingularSystemError("non-finite system entries");
  const double norm = inf_norm(matrix);
  Eigen::PartialPivLU<DenseMatrix> lu(matrix);
  const DenseMatrix& packed = lu.matrixLU();
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    if (std::abs(packed(i, i)) < 1e-14 * norm)
      throw SingularSystemError("singular system: pivot " + std::to_string(i) + " is " +
                                std::to_string(packed(i, i)));
  }
  LinearSolution out;
  out.x = lu.solve(rhs);
  if (!out.x.allFinite()) throw SingularSystemError("solution is not finite");
  const double denom = norm * out.x.lpNorm<Eigen::Infinity>() + rhs.lpNorm<Eigen::Infinity>();
  const double res = (matrix * out.x - rhs).lpNorm<Eigen::Infinity>();
  out.relative_residual = denom > 0.0 ? res / denom : res;
  return out;
}

double condition_number_2(const DenseMatrix& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
    throw ConfigurationError("condition number needs a non-empty square matrix");
  if (!matrix.allFinite()) throw SingularSystemError("non-finite matrix entries");
  Eigen::BDCSVD<DenseMatrix> svd(matrix);
  const Vector& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > std::numeric_limits<double>::epsilon() * smax * static_cast<double>(s.size())))
    return std::numeric_limits<double>::infinity();
  return smax / smin;
}

}  // namespace pdcouple
