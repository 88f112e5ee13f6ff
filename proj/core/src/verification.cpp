#include "pdcouple/verification.hpp"

#include <cmath>
#include <string>

#include "pdcouple/errors.hpp"
#include "pdcouple/harness.hpp"

namespace pdcouple {

namespace {

void check_distinct(std::span<const Rational> nodes) {
  if (nodes.empty()) throw DegenerateSupportError("empty support");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j]) throw DegenerateSupportError("repeated rational node");
}

}  // namespace

std::vector<Rational> rational_lagrange(std::span<const Rational> nodes, const Rational& target) {
  check_distinct(nodes);
  std::vector<Rational> w(nodes.size(), Rational(1));
  for (std::size_t j = 0; j < nodes.size(); ++j)
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (i != j) w[j] *= (target - nodes[i]) / (nodes[j] - nodes[i]);
  return w;
}

std::vector<Rational> rational_lagrange_derivative(std::span<const Rational> nodes, const Rational& target) {
  check_distinct(nodes);
  const std::size_t n = nodes.size();
  std::vector<Rational> w(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      Rational t = Rational(1) / (nodes[j] - nodes[k]);
      for (std::size_t i = 0; i < n; ++i)
        if (i != j && i != k) t *= (target - nodes[i]) / (nodes[j] - nodes[i]);
      w[j] += t;
    }
  }
  return w;
}

std::vector<double> pd_row_by_quadrature(std::span<const double> nodes, int k, int radius,
                                         const BondStiffness& stiffness) {
  if (radius < 1) throw ConfigurationError("quadrature radius must be >= 1");
  if (k - radius < 0 || k + radius >= static_cast<int>(nodes.size()))
    throw StencilRangeError("quadrature window outside the grid");
  const double x = nodes[k];
  // Trapezoid nodes x_{k-r} .. x_{k+r}; the integrand at y = x is taken as 0.
  std::vector<double> row(2 * radius + 1, 0.0);
  for (int i = -radius; i <= radius; ++i) {
    if (i == 0) continue;
    const double y = nodes[k + i];
    double weight = 0.0;
    if (i == -radius)
      weight = 0.5 * (nodes[k + i + 1] - y);
    else if (i == radius)
      weight = 0.5 * (y - nodes[k + i - 1]);
    else
      weight = 0.5 * (nodes[k + i + 1] - nodes[k + i - 1]);
    const double c = stiffness(x, y) * weight / std::abs(y - x);
    row[radius + i] -= c;
    row[radius] += c;
  }
  return row;
}

int degree_of_precision(const CaseConfig& config) {
  static const char* kCases[] = {"linear", "quadratic", "cubic", "quartic"};
  int best = 0;
  for (int q = 1; q <= 4; ++q) {
    CaseConfig c = config;
    c.case_name = kCases[q - 1];
    c.bc = BoundaryCondition::kMixed;
    c.profile_c.reset();
    c.reference = ReferenceSpec{};
    c.compute_condition = false;
    const CaseReport r = run_case(c);
    if (r.summary.max_abs_err <= 1e-9)
      best = q;
    else
      break;
  }
  return best;
}

}  // namespace pdcouple
