#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "pdcouple/errors.hpp"
#include "pdcouple/physics.hpp"

using namespace pdcouple;

TEST(Physics, KappaCalibration) {
  EXPECT_DOUBLE_EQ(kappa(1.0, 0.125), 128.0);
  for (double d : {0.5, 0.1, 1.0 / 64}) EXPECT_NEAR(kappa(2.5, d) * d * d / 2, 2.5, 1e-13);
  EXPECT_THROW(kappa(1.0, 0.0), ConfigurationError);
}

TEST(Physics, HorizonField) {
  const double delta = 0.125;
  const HorizonField h(delta, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(h(1.0 + delta / 2), delta / 2);
  EXPECT_DOUBLE_EQ(h.kappa_at(1.0, 1.0 + delta / 2), 8.0 / (delta * delta));
  EXPECT_DOUBLE_EQ(h(1.0 + delta), delta);
  EXPECT_DOUBLE_EQ(h(2.0 - delta), delta);
  EXPECT_DOUBLE_EQ(h(1.5), delta);
  for (double x = 1.001; x < 2.0; x += 0.01) EXPECT_GT(h(x), 0.0);
  EXPECT_EQ(h(1.0), 0.0);
  EXPECT_THROW((void)h.kappa_at(1.0, 1.0), ConfigurationError);
}

TEST(Physics, SplineProfileKnots) {
  EXPECT_DOUBLE_EQ(ElasticModulusProfile::spline(0.25)(1.5), 0.25);
  EXPECT_DOUBLE_EQ(ElasticModulusProfile::spline(0.5)(1.375), 0.75);
  for (double c : {0.1, 0.5, 0.9}) {
    const auto E = ElasticModulusProfile::spline(c);
    EXPECT_EQ(E(1.0), 1.0);
    EXPECT_EQ(E(0.3), 1.0);
    EXPECT_EQ(E(2.5), 1.0);
    EXPECT_FALSE(E.is_constant());
  }
}

TEST(Physics, SplineProfileShape) {
  for (double c : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    const auto E = ElasticModulusProfile::spline(c);
    double lo = 1e300;
    for (int i = 0; i <= 1000; ++i) {
      const double t = 0.25 * i / 1000.0;
      EXPECT_NEAR(E(1.5 - t), E(1.5 + t), 1e-12);
      lo = std::min(lo, E(1.25 + 0.5 * i / 1000.0));
    }
    EXPECT_GE(lo, std::min(c, 1.0) - 1e-9) << "c = " << c;
    EXPECT_NEAR(E(1.25 + 1e-9), 1.0, 1e-8);
    EXPECT_NEAR(E(1.75 - 1e-9), 1.0, 1e-8);
  }
}

TEST(Physics, ClampedSplineEndSlopes) {
  const ClampedCubicSpline s({0.0, 1.0, 2.0, 3.0}, {0.0, 1.0, 0.0, 2.0}, 0.5, -1.0);
  EXPECT_NEAR(s.derivative(1e-12), 0.5, 1e-9);
  EXPECT_NEAR(s.derivative(3.0 - 1e-12), -1.0, 1e-9);
  EXPECT_DOUBLE_EQ(s(1.0), 1.0);
  EXPECT_DOUBLE_EQ(s(2.0), 0.0);
  // Reproduces a cubic with matching end slopes.
  const auto cubic = [](double x) { return x * x * x - 2 * x; };
  const ClampedCubicSpline c({0.0, 0.5, 1.5, 2.0}, {cubic(0.0), cubic(0.5), cubic(1.5), cubic(2.0)}, -2.0, 10.0);
  for (double x = 0.0; x <= 2.0; x += 0.05) EXPECT_NEAR(c(x), cubic(x), 1e-12);
  EXPECT_THROW(ClampedCubicSpline({0.0, 0.0}, {1.0, 1.0}), ConfigurationError);
}

TEST(Physics, ProfileValidation) {
  EXPECT_THROW(ElasticModulusProfile::spline(0.0), ConfigurationError);
  EXPECT_THROW(ElasticModulusProfile::constant(-1.0), ConfigurationError);
  EXPECT_EQ(ElasticModulusProfile::constant(2.0)(1.7), 2.0);
  EXPECT_TRUE(ElasticModulusProfile::constant(2.0).is_constant());
}

TEST(Physics, ManufacturedData) {
  const auto quartic = manufactured_case("quartic");
  EXPECT_NEAR(quartic.forcing(1.5), -(4.0 / 27) * 2.25, 1e-15);
  EXPECT_NEAR(quartic.traction(), 4.0 / 3, 1e-15);
  const auto linear = manufactured_case("linear");
  EXPECT_EQ(linear.forcing(0.7), 0.0);
  EXPECT_NEAR(linear.traction(), 1.0 / 3, 1e-15);
  EXPECT_NEAR(manufactured_case("quadratic").forcing(2.0), -2.0 / 9, 1e-15);
  const auto cubic = manufactured_case("cubic");
  EXPECT_NEAR(cubic.forcing(1.2), -2.0 * 1.2 / 9, 1e-15);
  EXPECT_NEAR(cubic.traction(), 1.0, 1e-15);
  const auto dq = manufactured_case("dirichlet_quartic");
  EXPECT_EQ(dq.default_bc, BoundaryCondition::kDirichletBoth);
  EXPECT_NEAR(dq.u(1.5), 1.0, 1e-15);
  EXPECT_NEAR(dq.u(0.0), 0.0, 1e-15);
  EXPECT_NEAR(dq.u(3.0), 0.0, 1e-13);
  for (double x : {0.0, 0.5, 1.5, 2.9})
    EXPECT_NEAR(dq.forcing(x), -(16.0 / 81) * (12 * x * x - 36 * x + 18), 1e-13);
  EXPECT_THROW(manufactured_case("sextic"), ConfigurationError);
}

TEST(Physics, ForcingMatchesSecondDerivative) {
  const double h = 1e-4;
  for (const std::string& name : manufactured_case_names()) {
    const auto c = manufactured_case(name);
    for (int i = 0; i < 100; ++i) {
      const double x = 0.01 + 2.98 * i / 99.0;
      const double upp = (c.u(x - h) - 2 * c.u(x) + c.u(x + h)) / (h * h);
      EXPECT_NEAR(-upp, c.forcing(x), 1e-6) << name << " at " << x;
    }
    if (c.default_bc == BoundaryCondition::kMixed) EXPECT_DOUBLE_EQ(c.traction(), c.du(3.0));
  }
}

TEST(Physics, Polynomial) {
  const Polynomial p({1.0, -2.0, 0.0, 3.0});
  EXPECT_DOUBLE_EQ(p(2.0), 1 - 4 + 24);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_DOUBLE_EQ(p.derivative()(2.0), -2 + 36);
  EXPECT_EQ(Polynomial({5.0}).derivative()(1.0), 0.0);
}
