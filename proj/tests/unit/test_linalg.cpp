#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "pdcouple/errors.hpp"
#include "pdcouple/linalg.hpp"

using namespace pdcouple;

namespace {

DenseMatrix random_matrix(int n, std::mt19937& rng, double diagonal_boost) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  m.diagonal().array() += diagonal_boost;
  return m;
}

// ||M||_2 ||M^-1||_2 from the eigenvalues of the Gram matrices, independent of the SVD.
double cond_by_inverse(const DenseMatrix& m) {
  const DenseMatrix inv = m.inverse();
  Eigen::SelfAdjointEigenSolver<DenseMatrix> a(m.transpose() * m);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> b(inv.transpose() * inv);
  return std::sqrt(a.eigenvalues().maxCoeff()) * std::sqrt(b.eigenvalues().maxCoeff());
}

}  // namespace

TEST(Solve, Identity) {
  const Vector b = Vector::LinSpaced(5, 1.0, 5.0);
  const LinearSolution s = solve(DenseMatrix::Identity(5, 5), b);
  EXPECT_EQ(s.x, b);
  EXPECT_EQ(s.relative_residual, 0.0);
}

TEST(Solve, Diagonal) {
  DenseMatrix m(2, 2);
  m << 2, 0, 0, 4;
  Vector b(2);
  b << 2, 8;
  const LinearSolution s = solve(m, b);
  EXPECT_DOUBLE_EQ(s.x(0), 1.0);
  EXPECT_DOUBLE_EQ(s.x(1), 2.0);
}

TEST(Solve, RandomWellConditioned) {
  std::mt19937 rng(7);
  const DenseMatrix m = random_matrix(50, rng, 10.0);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Vector b(50);
  for (int i = 0; i < 50; ++i) b(i) = d(rng);
  const LinearSolution s = solve(m, b);
  EXPECT_LT((m * s.x - b).lpNorm<Eigen::Infinity>(), 1e-12);
  EXPECT_LE(s.relative_residual, 1e-10);
}

TEST(Solve, SingularIsReported) {
  DenseMatrix m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  EXPECT_THROW(solve(m, Vector::Ones(3)), SingularSystemError);
  EXPECT_THROW(solve(DenseMatrix::Zero(2, 2), Vector::Ones(2)), SingularSystemError);
  DenseMatrix nan = DenseMatrix::Identity(2, 2);
  nan(0, 1) = std::nan("");
  EXPECT_THROW(solve(nan, Vector::Ones(2)), SingularSystemError);
  EXPECT_THROW(solve(DenseMatrix::Identity(2, 2), Vector::Ones(3)), ConfigurationError);
}

TEST(Condition, Basics) {
  EXPECT_NEAR(condition_number_2(DenseMatrix::Identity(4, 4)), 1.0, 1e-14);
  DenseMatrix d = DenseMatrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 10;
  EXPECT_NEAR(condition_number_2(d), 10.0, 1e-12);
  DenseMatrix s(2, 2);
  s << 1, 1, 1, 1;
  EXPECT_TRUE(std::isinf(condition_number_2(s)));
  EXPECT_THROW(condition_number_2(DenseMatrix::Zero(2, 3)), ConfigurationError);
}

TEST(Condition, MatchesInverseOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const DenseMatrix m = random_matrix(20, rng, trial);
    const double c = condition_number_2(m);
    EXPECT_NEAR(c / cond_by_inverse(m), 1.0, 1e-8);
  }
}

TEST(Condition, ScaleInvariant) {
  std::mt19937 rng(3);
  const DenseMatrix m = random_matrix(15, rng, 2.0);
  const double c = condition_number_2(m);
  for (double alpha : {-3.0, 1e-4, 250.0}) EXPECT_NEAR(condition_number_2(alpha * m) / c, 1.0, 1e-10);
}

TEST(Norms, InfNorm) {
  DenseMatrix m(2, 2);
  m << 1, -2, 3, 0.5;
  EXPECT_EQ(inf_norm(m), 3.5);
}
