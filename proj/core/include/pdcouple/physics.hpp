#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pdcouple/geometry.hpp"

namespace pdcouple {

/// Bond micromodulus matching a 1D elastic modulus E for horizon delta.
double kappa(double modulus, double delta);

/// Polynomial with coefficients in ascending order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<double>& coefficients() const { return c_; }

 private:
  std::vector<double> c_;
};

/// Cubic spline with prescribed end slopes.
class ClampedCubicSpline {
 public:
  ClampedCubicSpline(std::vector<double> knots, std::vector<double> values, double slope_begin = 0.0,
                     double slope_end = 0.0);

  /// Evaluate; outside the knot range the end values are held.
  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] double derivative(double x) const;
  [[nodiscard]] const std::vector<double>& knots() const { return x_; }

 private:
  [[nodiscard]] int interval(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

/// Young's modulus along the bar.
class ElasticModulusProfile {
 public:
  static ElasticModulusProfile constant(double modulus = 1.0);
  /// Softened inclusion: 1 outside (1.25, 1.75), a clamped spline dipping to
  /// `c` at x = 1.5 inside it.
  static ElasticModulusProfile spline(double c);
  /// Arbitrary positive modulus, mainly for tests.
  static ElasticModulusProfile from_function(std::function<double(double)> modulus);

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] bool is_constant() const { return !fn_; }
  [[nodiscard]] double c() const { return c_; }

 private:
  ElasticModulusProfile() = default;

  double base_ = 1.0;
  double c_ = 1.0;
  std::function<double(double)> fn_;  // empty for a constant modulus
};

/// Horizon of the variable-horizon model: the full horizon in the interior
/// of (a, b), shrinking linearly to zero at the interfaces.
class HorizonField {
 public:
  HorizonField(double delta, double a, double b);

  [[nodiscard]] double operator()(double x) const;
  /// Micromodulus that keeps the local modulus E at x.
  [[nodiscard]] double kappa_at(double modulus, double x) const;

 private:
  double delta_;
  double a_;
  double b_;
};

enum class BoundaryCondition {
  kMixed,          // value at x = 0, traction E u'(length) = g
  kDirichletBoth,  // values prescribed at both ends
};

/// Problem with a known polynomial solution for E = 1.
///
/// The forcing and the traction are always those of the E = 1 problem; with
/// a non-constant modulus the exact solution is no longer `u` and an FDM
/// reference has to be used.
struct ManufacturedCase {
  std::string name;
  Polynomial solution;
  BoundaryCondition default_bc = BoundaryCondition::kMixed;
  double length = 3.0;

  [[nodiscard]] double u(double x) const { return solution(x); }
  [[nodiscard]] double du(double x) const;
  /// Body force f = -u''.
  [[nodiscard]] double forcing(double x) const;
  /// Traction u'(length).
  [[nodiscard]] double traction() const { return du(length); }
};

/// linear, quadratic, cubic, quartic or dirichlet_quartic.
ManufacturedCase manufactured_case(std::string_view name, double length = 3.0);
std::vector<std::string> manufactured_case_names();

}  // namespace pdcouple
